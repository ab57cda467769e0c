//! Text and JSON renderings. Both carry the same data.

use lgz_core::grothendieck::SurgeryTrace;
use lgz_core::ihara::IharaError;
use lgz_core::pointcount::VerifyReport;
use lgz_core::polyring::IntPolynomial;
use lgz_core::zeta::{FactoredZeta, ZetaStyle};
use serde_json::json;

pub fn class(p: &IntPolynomial, as_json: bool) -> String {
    if as_json {
        json!(p).to_string()
    } else {
        p.to_string_with("L")
    }
}

pub fn zeta(z: &FactoredZeta, as_json: bool) -> String {
    if as_json {
        json!(z).to_string()
    } else {
        z.format(ZetaStyle::Inverse)
    }
}

pub fn ihara(p: &IntPolynomial, as_json: bool) -> String {
    if as_json {
        json!(p).to_string()
    } else {
        p.to_string_with("u")
    }
}

pub fn count(q: u64, n: u64, as_json: bool) -> String {
    if as_json {
        json!({ "prime": q, "count": n }).to_string()
    } else {
        n.to_string()
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

pub fn verify(r: &VerifyReport, as_json: bool) -> String {
    if as_json {
        return json!(r).to_string();
    }
    let mut lines: Vec<String> = r
        .primes
        .iter()
        .map(|c| format!("q = {}: expected {}, counted {}, {}", c.prime, c.expected, c.counted, mark(c.ok)))
        .collect();
    lines.push(format!(
        "P(1) = {}, vertices {}, {}",
        r.euler.got,
        r.euler.expected,
        mark(r.euler.ok)
    ));
    lines.push(if r.ok { "verification passed".into() } else { "verification FAILED".into() });
    lines.join("\n")
}

/// Tab-separated table: a tree row, then one row per unresolved edge.
pub fn trace(t: &SurgeryTrace, as_json: bool) -> String {
    if as_json {
        return json!(t.to_json_steps()).to_string();
    }
    let mut lines = vec![
        "step\tedge\tdelta\tclass".to_string(),
        format!("tree\t-\t-\t{}", t.final_tree_class),
    ];
    for (i, s) in t.steps.iter().enumerate() {
        lines.push(format!(
            "{}\t{} {}\t{}\t{}",
            i + 1,
            s.resolved_edge.a(),
            s.resolved_edge.b(),
            s.delta,
            s.running
        ));
    }
    lines.join("\n")
}

pub fn compare(
    class: &IntPolynomial,
    z: &FactoredZeta,
    ihara: &Result<IntPolynomial, IharaError>,
    as_json: bool,
) -> String {
    if as_json {
        let ih = match ihara {
            Ok(p) => json!(p),
            Err(_) => serde_json::Value::Null,
        };
        return json!({ "class": class, "zeta": z, "ihara": ih }).to_string();
    }
    let ih = match ihara {
        Ok(p) => p.to_string_with("u"),
        Err(e) => format!("n/a ({e})"),
    };
    format!(
        "P(L)          = {}\nzeta_F1^-1    = {}\nzeta_Ihara^-1 = {}",
        class.to_string_with("L"),
        z.format(ZetaStyle::Inverse),
        ih
    )
}
