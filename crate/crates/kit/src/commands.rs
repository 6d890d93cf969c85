use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use verlinde_core::fusion::Mismatch;
use verlinde_core::gusrep::{check_quantum_dynkin, ValidationReport};
use verlinde_core::rootspace::{exponent_multiplicities, RootSpace};
use verlinde_core::{Family, FusionRing, LevelData, LieAlgebra, Limits, TorusElement, Weight};

use crate::config::{Config, Format};
use crate::error::{KitError, KitResult};
use crate::quiver::QuiverFile;

pub const SCHEMA: &str = "verlinde-kit/1";

/// A flat table for CSV output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}

/// Output of a command: a JSON document, its flat table and whether every
/// check passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: Table,
    pub ok: bool,
}

impl Report {
    fn new(command: &str, mut body: Value, table: Table, ok: bool) -> Self {
        let obj = body.as_object_mut().expect("report body is an object");
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(command));
        obj.insert("ok".into(), json!(ok));
        Report { json: body, table, ok }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable report");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
        }
    }
}

pub fn parse_family(s: &str) -> KitResult<Family> {
    let mut chars = s.chars();
    match (chars.next().map(|c| c.to_ascii_uppercase()).and_then(Family::from_char), chars.next()) {
        (Some(f), None) => Ok(f),
        _ => Err(KitError::Usage(format!("unknown family {s:?}; expected one of A-G"))),
    }
}

/// Parses Dynkin labels written as `1,0` or `1 0`.
pub fn parse_weight(s: &str, rank: usize) -> KitResult<Weight> {
    let w: Weight = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| KitError::Usage(format!("bad label {t:?} in {s:?}"))))
        .collect::<KitResult<_>>()?;
    if w.len() != rank {
        return Err(KitError::Usage(format!("weight {s:?} has {} labels, rank is {rank}", w.len())));
    }
    Ok(w)
}

fn labels(w: &[i64]) -> String {
    w.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn unshift(alg: &LieAlgebra, k: &[i64]) -> Weight {
    k.iter().zip(alg.rho()).map(|(a, b)| a - b).collect()
}

fn point_json(h: &TorusElement) -> Value {
    json!(h.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn point_csv(h: &TorusElement) -> String {
    h.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn cmd_lie(family: &str, rank: usize) -> KitResult<Report> {
    let alg = LieAlgebra::new(parse_family(family)?, rank)?;
    let center: Vec<String> = alg.center().cyclic_orders().iter().map(|d| d.to_string()).collect();
    let body = json!({
        "algebra": {"family": alg.family().as_char().to_string(), "rank": rank},
        "cartan": alg.cartan(),
        "positive_roots": alg.positive_roots(),
        "positive_root_count": alg.positive_roots().len(),
        "highest_root": alg.highest_root(),
        "marks": alg.marks(),
        "comarks": alg.comarks(),
        "coxeter_number": alg.coxeter_number(),
        "dual_coxeter_number": alg.dual_coxeter_number(),
        "rho": alg.rho(),
        "weyl_order": alg.weyl_order(),
        "center": {"order": alg.center_order(), "cyclic_orders": center},
    });
    let mut table = Table::new(&["index", "root", "height"]);
    for (i, (r, c)) in alg.positive_roots().iter().zip(alg.positive_root_coords()).enumerate() {
        table.rows.push(vec![i.to_string(), labels(r), c.iter().sum::<i64>().to_string()]);
    }
    Ok(Report::new("lie", body, table, true))
}

fn build_ring(family: Family, rank: usize, level: u64, limits: &Limits) -> KitResult<Arc<FusionRing>> {
    let alg = LieAlgebra::new(family, rank)?;
    Ok(Arc::new(FusionRing::new(LevelData::with_limits(&alg, level, limits)?)?))
}

/// Verlinde coefficients for the rows `ks`, split over `threads` workers.
/// Results are assembled in row order regardless of scheduling.
fn verlinde_rows(ring: &FusionRing, ks: &[usize], threads: usize) -> KitResult<Vec<Mismatch>> {
    let m = ring.rank();
    let chunk = ks.len().div_ceil(threads.max(1)).max(1);
    let parts: Vec<KitResult<Vec<_>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ks
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut bad = Vec::new();
                    for &k in part {
                        for j in 0..m {
                            for s in 0..m {
                                let v = ring.verlinde_coefficient(k, j, s)?;
                                let kw = ring.coefficient(k, j, s);
                                if v != kw {
                                    bad.push((k, j, s, kw, v));
                                }
                            }
                        }
                    }
                    Ok(bad)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn cmd_fusion(
    family: &str,
    rank: usize,
    level: u64,
    pair: Option<(&str, &str)>,
    verify: bool,
    config: &Config,
) -> KitResult<Report> {
    let family = parse_family(family)?;
    let ring = build_ring(family, rank, level, &config.limits()?)?;
    let ld = ring.level();
    let alg = ld.algebra();
    let basis = ring.basis();
    let rows: Vec<usize> = match pair {
        None => (0..ring.rank()).collect(),
        Some((k, _)) => {
            let k = parse_weight(k, rank)?;
            let shifted: Weight = k.iter().zip(alg.rho()).map(|(a, b)| a + b).collect();
            vec![ld.alcove_position(&shifted).ok_or_else(|| KitError::Usage(format!("{k:?} is not at level {level}")))?]
        }
    };
    let cols: Vec<usize> = match pair {
        None => (0..ring.rank()).collect(),
        Some((_, j)) => {
            let j = parse_weight(j, rank)?;
            let shifted: Weight = j.iter().zip(alg.rho()).map(|(a, b)| a + b).collect();
            vec![ld.alcove_position(&shifted).ok_or_else(|| KitError::Usage(format!("{j:?} is not at level {level}")))?]
        }
    };
    let mut entries = Vec::new();
    let mut table = Table::new(&["k", "j", "s", "N"]);
    for &k in &rows {
        for &j in &cols {
            for s in 0..ring.rank() {
                let n = ring.coefficient(k, j, s);
                if n != 0 {
                    let (wk, wj, ws) = (unshift(alg, &basis[k]), unshift(alg, &basis[j]), unshift(alg, &basis[s]));
                    table.rows.push(vec![labels(&wk), labels(&wj), labels(&ws), n.to_string()]);
                    entries.push(json!({"k": wk, "j": wj, "s": ws, "N": n}));
                }
            }
        }
    }
    let mut body = json!({
        "algebra": {"family": family.as_char().to_string(), "rank": rank},
        "level": level,
        "basis": basis.iter().map(|k| unshift(alg, k)).collect::<Vec<_>>(),
        "entries": entries,
    });
    let mut ok = true;
    if verify {
        let bad = verlinde_rows(&ring, &rows, config.parallel)?;
        let axioms = ring.check_axioms();
        ok = bad.is_empty() && axioms.all_pass();
        let mismatches: Vec<Value> = bad
            .iter()
            .map(|&(k, j, s, kw, v)| {
                json!({"k": unshift(alg, &basis[k]), "j": unshift(alg, &basis[j]), "s": unshift(alg, &basis[s]),
                       "verlinde": v, "kac_walton": kw})
            })
            .collect();
        body["verify"] = json!({
            "oracles_agree": bad.is_empty(),
            "mismatches": mismatches,
            "axioms": {
                "unit": axioms.unit, "duality": axioms.duality, "conjugation": axioms.conjugation,
                "commutativity": axioms.commutativity, "grading": axioms.grading,
                "associativity": axioms.associativity,
            },
        });
    }
    Ok(Report::new("fusion", body, table, ok))
}

fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "dimension": r.dimension,
        "extension": r.extension.as_ref().err().map(|e| e.to_string()),
        "generators": r.generators,
        "unit": r.unit,
        "star": r.star,
        "homomorphism": r.homomorphism,
        "grading": r.grading,
        "natural": r.natural,
        "failures": r.failures,
        "pass": r.all_pass(),
    })
}

fn load_quiver(path: &Path, level: Option<u64>) -> KitResult<verlinde_core::GradedQuiver> {
    let mut q = QuiverFile::load(path)?.to_quiver()?;
    if let Some(l) = level {
        q.level = l;
    }
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RepCommand {
    Validate,
    Spectrum,
    Exponents,
    Roots,
}

pub fn cmd_rep(sub: RepCommand, path: &Path, level: Option<u64>, config: &Config) -> KitResult<Report> {
    let q = load_quiver(path, level)?;
    let ring = build_ring(q.family, q.rank, q.level, &config.limits()?)?;
    let rep = q.to_usrep(ring)?;
    let report = rep.validate();
    let valid = report.all_pass();
    let mut body = json!({
        "algebra": {"family": q.family.as_char().to_string(), "rank": q.rank},
        "level": q.level,
        "validation": validation_json(&report),
    });
    let (name, table, ok) = match sub {
        RepCommand::Validate => {
            let mut t = Table::new(&["check", "pass"]);
            for (name, v) in [
                ("extension", report.extension.is_ok()),
                ("generators", report.generators),
                ("unit", report.unit),
                ("star", report.star),
                ("homomorphism", report.homomorphism),
                ("grading", report.grading != Some(false)),
            ] {
                t.rows.push(vec![name.into(), v.to_string()]);
            }
            ("rep validate", t, valid)
        }
        _ if !valid => ("rep", Table::new(&["check", "pass"]), false),
        RepCommand::Spectrum => {
            let s = rep.spectrum()?;
            let mut t = Table::new(&["point", "multiplicity"]);
            let rows: Vec<Value> = s
                .points
                .iter()
                .zip(&s.multiplicities)
                .map(|(h, m)| {
                    t.rows.push(vec![point_csv(h), m.to_string()]);
                    json!({"point": point_json(h), "multiplicity": m})
                })
                .collect();
            body["spectrum"] = json!(rows);
            body["total"] = json!(s.total());
            ("rep spectrum", t, true)
        }
        RepCommand::Exponents => {
            let e = exponent_multiplicities(&rep)?;
            let mut t = Table::new(&["point", "exponent", "m_pi", "m_phi", "m_phi0"]);
            let rows: Vec<Value> = e
                .rows
                .iter()
                .map(|r| {
                    let m0 = r.m_phi0.map_or(String::new(), |x| x.to_string());
                    t.rows.push(vec![
                        point_csv(&r.point),
                        r.exponent.to_string(),
                        r.m_pi.to_string(),
                        r.m_phi.to_string(),
                        m0,
                    ]);
                    json!({"point": point_json(&r.point), "exponent": r.exponent, "m_pi": r.m_pi,
                           "m_phi": r.m_phi, "m_phi0": r.m_phi0})
                })
                .collect();
            body["exponents"] = json!(rows);
            body["ade_equality"] = json!(e.ade_equality);
            ("rep exponents", t, e.ade_equality != Some(false))
        }
        RepCommand::Roots => {
            let space = RootSpace::new(&rep)?;
            let roots = space.quantum_root_system()?;
            let w = rep.ring().level().algebra().weyl_order() as i64;
            let norms_ok = roots.iter().all(|r| r.norm2() == w.into());
            let mut keys: Vec<&Vec<i64>> = roots.iter().map(|r| &r.coeffs).collect();
            keys.sort();
            keys.dedup();
            let distinct = keys.len() == roots.len();
            let mut t = Table::new(&["point", "vertex", "norm2"]);
            let list: Vec<Value> = roots
                .iter()
                .map(|r| {
                    let p = &space.points()[r.point];
                    t.rows.push(vec![labels(p), q.vertices[r.basis].id.clone(), r.norm2().to_string()]);
                    json!({"point": p, "vertex": q.vertices[r.basis].id, "coefficients": r.coeffs})
                })
                .collect();
            body["roots"] = json!({
                "count": roots.len(),
                "scale": format!("1/sqrt({})", space.points().len()),
                "weyl_order": w,
                "norms_equal_weyl_order": norms_ok,
                "distinct": distinct,
                "list": list,
            });
            ("rep roots", t, norms_ok && distinct)
        }
    };
    Ok(Report::new(name, body, table, ok))
}

pub fn cmd_check_dynkin(path: &Path, level: Option<u64>, config: &Config) -> KitResult<Report> {
    let q = load_quiver(path, level)?;
    let cert = check_quantum_dynkin(&q, &config.limits()?)?;
    let body = json!({
        "algebra": {"family": q.family.as_char().to_string(), "rank": q.rank},
        "level": q.level,
        "valid": cert.valid,
        "natural": cert.natural,
        "simple": cert.simple,
        "rejection": cert.rejection.as_ref().map(|e| e.to_string()),
        "validation": cert.report.as_ref().map(validation_json),
    });
    let mut t = Table::new(&["property", "value"]);
    for (k, v) in [("valid", cert.valid), ("natural", cert.natural), ("simple", cert.simple)] {
        t.rows.push(vec![k.into(), v.to_string()]);
    }
    Ok(Report::new("check-dynkin", body, t, cert.valid))
}
