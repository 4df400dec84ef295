use mfmoduli::chevalley::{SignConvention, StructureConstants};
use mfmoduli::cones::ConeError;
use mfmoduli::moduli::{enumerate_candidate_components, fingerprint, losev_bar, validate_sigmabar, ModuliError};
use mfmoduli::rootsys::{coeffs_label, RootSystem};
use mfmoduli::sigmabar::{enumerate_sigmabar, SphericalRoot};
use mfmoduli::tangent::{compute_phi, ConditionResult, PhiCertificate, TangentError, Verdict, Witness};
use mfmoduli::Monoid;
use serde_json::{json, Map, Value};

use crate::input::ProblemFile;
use crate::render;
use crate::Failure;

fn monoid(p: &ProblemFile, rs: &RootSystem) -> Result<Monoid, Failure> {
    Monoid::build(rs, p.generators(rs)?).map_err(cone_failure)
}

fn cone_failure(e: ConeError) -> Failure {
    match e {
        ConeError::NonDominant { .. } | ConeError::WrongLength { .. } | ConeError::Lin(_) => {
            Failure::Malformed(e.to_string())
        }
        ConeError::NotPointed(_) => Failure::Precondition(e.to_string()),
    }
}

fn tangent_failure(e: TangentError) -> Failure {
    match e {
        TangentError::DimensionMismatch { .. } | TangentError::Lin(_) => Failure::Malformed(e.to_string()),
        _ => Failure::Precondition(e.to_string()),
    }
}

fn moduli_failure(e: ModuliError) -> Failure {
    match e {
        ModuliError::Tangent(t) => tangent_failure(t),
        ModuliError::Cone(c) => cone_failure(c),
        ModuliError::DimensionMismatch { .. } | ModuliError::NotPositive(_) | ModuliError::Lin(_) => {
            Failure::Malformed(e.to_string())
        }
        _ => Failure::Precondition(e.to_string()),
    }
}

fn with_notes(rs: &RootSystem, mut results: Map<String, Value>) -> Value {
    results.insert("dynkin".into(), json!(rs.spec().to_string()));
    results.insert("notes".into(), json!(rs.notes()));
    Value::Object(results)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("results are built as objects"),
    }
}

fn spherical_root(s: &SphericalRoot) -> Value {
    json!({
        "sigma_coeffs": s.coeffs,
        "label": s.label(),
        "row": s.row,
        "support": render::nodes(&s.support),
        "support_type": s.support_type,
        "pi_sigma": render::nodes(&s.pi_sigma),
    })
}

pub fn sigmabar(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let list: Vec<Value> = enumerate_sigmabar(&rs).iter().map(spherical_root).collect();
    Ok(with_notes(&rs, object(json!({ "count": list.len(), "elements": list }))))
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::NotApplicable => "not-applicable",
        Verdict::Unchecked => "unchecked",
    }
}

fn condition(c: &ConditionResult<num_bigint::BigInt>) -> Value {
    let witness = match &c.witness {
        Witness::None => Value::Null,
        Witness::Note(s) => json!(s),
        Witness::Rays(rays) => Value::Array(
            rays.iter()
                .map(|(r, d)| json!({ "ray": render::dual(r), "simple": d.map(|i| i + 1) }))
                .collect(),
        ),
        Witness::Pair { rho1, rho2, b1, b2 } => json!({
            "rho1": render::dual(rho1),
            "rho2": render::dual(rho2),
            "b1": render::rat(b1),
            "b2": render::rat(b2),
        }),
    };
    json!({ "verdict": verdict(c.verdict), "witness": witness })
}

fn certificate(c: &PhiCertificate<num_bigint::BigInt>) -> Value {
    let conditions: Map<String, Value> = c
        .conditions
        .iter()
        .enumerate()
        .map(|(k, r)| (format!("Φ{}", k + 1), condition(r)))
        .collect();
    json!({
        "sigma": c.coeffs,
        "label": coeffs_label(&c.coeffs),
        "row": c.sigma.as_ref().map(|s| s.row),
        "member": c.member,
        "conditions": conditions,
    })
}

/// `Ok(Err(report))` carries a report for an unsaturated monoid, which the
/// caller prints before exiting with a precondition failure.
pub fn phi(p: &ProblemFile) -> Result<Result<Value, (Value, Failure)>, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    match compute_phi(&m) {
        Ok(r) => Ok(Ok(with_notes(
            &rs,
            object(json!({
                "saturated": true,
                "dimension": r.dimension,
                "linearly_independent": r.linearly_independent,
                "phi": r.phi.iter().map(certificate).collect::<Vec<_>>(),
                "examined": r.examined.iter().map(certificate).collect::<Vec<_>>(),
            })),
        ))),
        Err(e @ (TangentError::Unsaturated | TangentError::SaturationUndecided)) => {
            let report = with_notes(
                &rs,
                object(json!({ "saturated": m.is_saturated(), "error": e.to_string() })),
            );
            Ok(Err((report, tangent_failure(e))))
        }
        Err(e) => Err(tangent_failure(e)),
    }
}

pub fn saturate(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    if !m.is_pointed() {
        return Err(cone_failure(ConeError::NotPointed(
            m.cone().lineality().len(),
        )));
    }
    let k1: Vec<Value> = m.k1().iter().map(render::dual).collect();
    Ok(with_notes(
        &rs,
        object(json!({
            "saturated": m.is_saturated(),
            "hilbert_basis": render::vecs(m.hilbert_basis().unwrap_or_default()),
            "lattice_basis": render::vecs(m.lattice().basis()),
            "k1": k1,
        })),
    ))
}

pub fn losev(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    let r = losev_bar(&m, p.sigma()?).map_err(moduli_failure)?;
    Ok(with_notes(
        &rs,
        object(json!({ "sigma": r.sigma, "sigma_bar": r.sigma_bar, "case": r.case })),
    ))
}

pub fn chevalley(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let convention = match p.convention.as_deref() {
        None | Some("tables") => SignConvention::Tables,
        Some("extraspecial") => SignConvention::Extraspecial,
        Some(other) => return Err(Failure::Malformed(format!("unknown convention `{other}`"))),
    };
    let table = StructureConstants::build_with(&rs, convention).map_err(|e| Failure::Precondition(e.to_string()))?;
    let constants: Map<String, Value> = table
        .entries()
        .into_iter()
        .map(|(a, b, n)| (format!("({},{})", json!(a), json!(b)), json!(n)))
        .collect();
    let jacobi = table.verify_jacobi();
    Ok(with_notes(
        &rs,
        object(json!({
            "convention": match convention {
                SignConvention::Tables => "tables",
                SignConvention::Extraspecial => "extraspecial",
            },
            "constants": constants,
            "jacobi": { "triples": jacobi.triples_checked, "violations": jacobi.violations },
            "relation_violations": table.check_relations(),
        })),
    ))
}

pub fn validate(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    let r = validate_sigmabar(&m, p.sigma_bar()?).map_err(moduli_failure)?;
    let mut out = object(serde_json::to_value(&r).expect("serializable"));
    out.insert("realizability".into(), json!("unknown"));
    Ok(with_notes(&rs, out))
}

pub fn components(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    let comps = enumerate_candidate_components(&m).map_err(moduli_failure)?;
    let list = comps
        .iter()
        .map(|c| {
            Ok(json!({
                "sigma_bar": c.elements(),
                "dimension": c.component_dimension(),
                "sigma": render::vecs(&c.sigma_from_sigmabar().map_err(moduli_failure)?),
            }))
        })
        .collect::<Result<Vec<Value>, Failure>>()?;
    Ok(with_notes(
        &rs,
        object(json!({
            "candidates": list,
            "upper_bound": true,
            "realizability": "unknown",
        })),
    ))
}

pub fn fingerprint_cmd(p: &ProblemFile) -> Result<Value, Failure> {
    let rs = p.root_system()?;
    let m = monoid(p, &rs)?;
    let f = fingerprint(&m, p.sigma_bar()?).map_err(moduli_failure)?;
    Ok(with_notes(
        &rs,
        object(json!({
            "canonical": f.canonical(),
            "hilbert_basis": render::vecs(&f.hilbert_basis),
            "sigma_bar": f.sigma_bar,
        })),
    ))
}
