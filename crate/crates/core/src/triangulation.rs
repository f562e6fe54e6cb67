//! Ideal-triangulation data model, the line-oriented fixture format, and the
//! embedded census fixtures consumed by the rest of the pipeline.
//!
//! A fixture stores the gluing system in coefficient form: one row of
//! `(a_i, b_i, c_i)` exponent triples per equation, where the triple gives the
//! exponents of the three log-shape parameters `log z`, `log 1/(1-z)`,
//! `log (z-1)/z` of tetrahedron `i`. Edge rows have right-hand side `2*pi*i`
//! (`target_half_turns = 2`); peripheral holonomy rows have target `0` at the
//! complete structure.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::Cplx;

/// One row of the gluing/holonomy system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingEquation {
    /// Exponent triples `(a_i, b_i, c_i)`, one per tetrahedron.
    pub coeffs: Vec<[i64; 3]>,
    /// Right-hand side in units of `pi*i`.
    pub target_half_turns: i64,
}

impl GluingEquation {
    pub fn new(coeffs: Vec<[i64; 3]>, target_half_turns: i64) -> Self {
        Self { coeffs, target_half_turns }
    }

    /// Integer linear combination `p*self + q*other` (targets included).
    pub fn combine(&self, p: i64, other: &Self, q: i64) -> Self {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| [p * x[0] + q * y[0], p * x[1] + q * y[1], p * x[2] + q * y[2]])
            .collect();
        Self { coeffs, target_half_turns: p * self.target_half_turns + q * other.target_half_turns }
    }
}

/// Meridian/longitude holonomy rows for one cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspEquations {
    pub meridian: GluingEquation,
    pub longitude: GluingEquation,
}

/// An unoriented slope `±(p*mu + q*lambda)` on a cusp torus; `(p, q)` need not
/// be coprime, and `gcd(|p|, |q|)` is the torsion label of the filled core.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    /// Normalized representative of `±(p, q)`: `p > 0`, or `p = 0 && q > 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!((p, q) != (0, 0), "slope coordinates must not both vanish");
        if p < 0 || (p == 0 && q < 0) {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        }
    }

    /// Torsion label: `gcd(|p|, |q|)`.
    pub fn multiplicity(&self) -> i64 {
        self.p.abs().gcd(&self.q.abs())
    }

    /// Underlying primitive slope `(p/m, q/m)`.
    pub fn primitive(&self) -> Slope {
        let m = self.multiplicity();
        Slope::new(self.p / m, self.q / m)
    }
}

impl PartialEq for Slope {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.q) == (other.p, other.q)
    }
}
impl Eq for Slope {}
impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p, self.q).cmp(&(other.p, other.q))
    }
}
impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Per-cusp filling instruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filling {
    Unfilled,
    Along(Slope),
}

/// One filling instruction per cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingSpec(pub Vec<Filling>);

impl FillingSpec {
    pub fn unfilled(n_cusps: usize) -> Self {
        Self(vec![Filling::Unfilled; n_cusps])
    }

    /// Single-cusp fill, the common case for the census fixtures.
    pub fn fill_one(slope: Slope) -> Self {
        Self(vec![Filling::Along(slope)])
    }
}

/// Holonomy data for the (single) cusp of a fixture, used by the horoball
/// enumeration: parabolic translations of the cusp subgroup at the reference
/// cross-section, plus group generators as determinant-one matrices with the
/// cusp at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspHolonomy {
    pub mu_translation: Cplx,
    pub lambda_translation: Cplx,
    /// Matrices `[a, b, c, d]` representing `z -> (az + b)/(cz + d)`.
    pub generators: Vec<[Cplx; 4]>,
}

/// First-homology presentation fixture with marked peripheral classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Fixture {
    /// Relation rows over the generator set.
    pub relations: Vec<Vec<i64>>,
    pub generators: usize,
    pub meridian: Vec<i64>,
    pub longitude: Vec<i64>,
}

/// Census manifold with gluing-equation coefficient data, peripheral curves,
/// and optional derived-geometry fixture blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealTriangulation {
    pub name: String,
    pub n_tet: usize,
    pub n_cusps: usize,
    pub edge_equations: Vec<GluingEquation>,
    pub cusp_equations: Vec<CuspEquations>,
    /// `maxcusp` fixture line: maximal-cusp translations `(T_mu, T_lambda)`.
    pub max_cusp: Option<(Cplx, Cplx)>,
    pub holonomy: Option<CuspHolonomy>,
    pub h1: Option<H1Fixture>,
}

#[derive(Debug, Error)]
pub enum TriangulationError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: dimension mismatch: {msg}")]
    Dimension { line: usize, msg: String },
    #[error("unknown census manifold '{name}'; available: {available}")]
    UnknownCensus { name: String, available: String },
}

fn syn(line: usize, msg: impl Into<String>) -> TriangulationError {
    TriangulationError::Syntax { line: line + 1, msg: msg.into() }
}

fn dim(line: usize, msg: impl Into<String>) -> TriangulationError {
    TriangulationError::Dimension { line: line + 1, msg: msg.into() }
}

/// Parses coefficient syntax `a_1 b_1 c_1 ; a_2 b_2 c_2 ; ...` and an optional
/// trailing `target <k>`.
fn parse_coeff_row(
    line_no: usize,
    text: &str,
    n_tet: usize,
    default_target: i64,
) -> Result<GluingEquation, TriangulationError> {
    let (coeff_text, target) = match text.find("target") {
        Some(pos) => {
            let t = text[pos + "target".len()..]
                .trim()
                .parse::<i64>()
                .map_err(|_| syn(line_no, "malformed target value"))?;
            (&text[..pos], t)
        }
        None => (text, default_target),
    };
    let mut coeffs = Vec::new();
    for group in coeff_text.split(';') {
        let nums: Result<Vec<i64>, _> = group.split_whitespace().map(str::parse::<i64>).collect();
        let nums = nums.map_err(|_| syn(line_no, format!("malformed integer in '{}'", group.trim())))?;
        if nums.is_empty() {
            continue;
        }
        if nums.len() != 3 {
            return Err(syn(line_no, format!("expected 3 coefficients per tetrahedron, got {}", nums.len())));
        }
        coeffs.push([nums[0], nums[1], nums[2]]);
    }
    if coeffs.len() != n_tet {
        return Err(dim(line_no, format!("row has {} coefficient triples, header declares {} tetrahedra", coeffs.len(), n_tet)));
    }
    Ok(GluingEquation::new(coeffs, target))
}

fn parse_floats(line_no: usize, text: &str, expect: usize) -> Result<Vec<f64>, TriangulationError> {
    let vals: Result<Vec<f64>, _> = text.split_whitespace().map(str::parse::<f64>).collect();
    let vals = vals.map_err(|_| syn(line_no, "malformed decimal number"))?;
    if vals.len() != expect {
        return Err(dim(line_no, format!("expected {expect} numbers, got {}", vals.len())));
    }
    Ok(vals)
}

/// Parses the fixture grammar. Inverse of [`serialize`] on canonical files.
pub fn parse_triangulation(text: &str) -> Result<IdealTriangulation, TriangulationError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, name_line) = lines.next().ok_or_else(|| syn(0, "empty fixture"))?;
    let name = name_line
        .strip_prefix("name")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| syn(ln, "expected 'name <id>'"))?
        .to_string();

    let (ln, tet_line) = lines.next().ok_or_else(|| syn(ln, "missing 'tet' header"))?;
    let parts: Vec<&str> = tet_line.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "tet" || parts[2] != "cusps" {
        return Err(syn(ln, "expected 'tet <n> cusps <k>'"));
    }
    let n_tet: usize = parts[1].parse().map_err(|_| syn(ln, "malformed tetrahedron count"))?;
    let n_cusps: usize = parts[3].parse().map_err(|_| syn(ln, "malformed cusp count"))?;
    if n_tet == 0 || n_cusps == 0 {
        return Err(syn(ln, "tetrahedron and cusp counts must be positive"));
    }

    let mut edge_equations = Vec::with_capacity(n_tet);
    for k in 0..n_tet {
        let (ln, line) = lines.next().ok_or_else(|| syn(ln, format!("missing edge row {k}")))?;
        let rest = line
            .strip_prefix("edge")
            .ok_or_else(|| syn(ln, format!("expected 'edge {k} : ...'")))?;
        let (idx_text, coeffs) = rest
            .split_once(':')
            .ok_or_else(|| syn(ln, "expected ':' in edge row"))?;
        let idx: usize = idx_text.trim().parse().map_err(|_| syn(ln, "malformed edge index"))?;
        if idx != k {
            return Err(syn(ln, format!("edge rows out of order: expected {k}, found {idx}")));
        }
        edge_equations.push(parse_coeff_row(ln, coeffs, n_tet, 2)?);
    }

    let mut cusp_equations = Vec::with_capacity(n_cusps);
    let mut last_ln = ln;
    for c in 0..n_cusps {
        let mut take = |label: &str| -> Result<GluingEquation, TriangulationError> {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| syn(last_ln, format!("missing {label} row for cusp {c}")))?;
            last_ln = ln;
            let rest = line
                .strip_prefix(label)
                .ok_or_else(|| syn(ln, format!("expected '{label} : ...'")))?;
            let coeffs = rest
                .trim_start()
                .strip_prefix(':')
                .ok_or_else(|| syn(ln, format!("expected ':' in {label} row")))?;
            parse_coeff_row(ln, coeffs, n_tet, 0)
        };
        let meridian = take("meridian")?;
        let longitude = take("longitude")?;
        cusp_equations.push(CuspEquations { meridian, longitude });
    }

    let mut max_cusp = None;
    let mut holonomy: Option<CuspHolonomy> = None;
    let mut h1 = None;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("maxcusp") {
            let rest = rest.trim_start().strip_prefix(':').ok_or_else(|| syn(ln, "expected ':' after maxcusp"))?;
            let v = parse_floats(ln, rest, 4)?;
            max_cusp = Some((Cplx::new(v[0], v[1]), Cplx::new(v[2], v[3])));
        } else if let Some(rest) = line.strip_prefix("holonomy") {
            let rest = rest.trim();
            let hol = holonomy.get_or_insert_with(|| CuspHolonomy {
                mu_translation: Cplx::new(0.0, 0.0),
                lambda_translation: Cplx::new(0.0, 0.0),
                generators: Vec::new(),
            });
            if let Some(v) = rest.strip_prefix("mu") {
                let v = parse_floats(ln, v, 2)?;
                hol.mu_translation = Cplx::new(v[0], v[1]);
            } else if let Some(v) = rest.strip_prefix("lambda") {
                let v = parse_floats(ln, v, 2)?;
                hol.lambda_translation = Cplx::new(v[0], v[1]);
            } else if let Some(v) = rest.strip_prefix("gen") {
                let v = parse_floats(ln, v, 8)?;
                hol.generators.push([
                    Cplx::new(v[0], v[1]),
                    Cplx::new(v[2], v[3]),
                    Cplx::new(v[4], v[5]),
                    Cplx::new(v[6], v[7]),
                ]);
            } else {
                return Err(syn(ln, "expected 'holonomy mu|lambda|gen ...'"));
            }
        } else if let Some(rest) = line.strip_prefix("h1") {
            let (h1_name, rest) = rest
                .trim()
                .split_once(':')
                .ok_or_else(|| syn(ln, "expected 'h1 <name> : ...'"))?;
            if h1_name.trim() != name {
                return Err(syn(ln, format!("h1 block names '{}', fixture is '{}'", h1_name.trim(), name)));
            }
            let mut sections = rest.split(';').map(str::trim);
            let dims = sections.next().ok_or_else(|| syn(ln, "missing relations section"))?;
            let dims = dims
                .strip_prefix("relations")
                .ok_or_else(|| syn(ln, "expected 'relations <r>x<c>'"))?
                .trim();
            let (r_text, c_text) = dims.split_once('x').ok_or_else(|| syn(ln, "expected '<r>x<c>'"))?;
            let r: usize = r_text.trim().parse().map_err(|_| syn(ln, "malformed relation count"))?;
            let cols: usize = c_text.trim().parse().map_err(|_| syn(ln, "malformed generator count"))?;
            let entries_text = sections.next().ok_or_else(|| syn(ln, "missing relation entries"))?;
            let entries: Result<Vec<i64>, _> =
                entries_text.split_whitespace().map(str::parse::<i64>).collect();
            let entries = entries.map_err(|_| syn(ln, "malformed relation entry"))?;
            if entries.len() != r * cols {
                return Err(dim(ln, format!("h1 relations: {} entries for {r}x{cols}", entries.len())));
            }
            let relations = entries.chunks(cols.max(1)).map(<[i64]>::to_vec).collect::<Vec<_>>();
            let relations = if cols == 0 { vec![] } else { relations };
            let mut vector = |label: &str| -> Result<Vec<i64>, TriangulationError> {
                let sec = sections
                    .next()
                    .ok_or_else(|| syn(ln, format!("missing {label} section")))?;
                let body = sec
                    .strip_prefix(label)
                    .ok_or_else(|| syn(ln, format!("expected '{label} <vector>'")))?;
                let v: Result<Vec<i64>, _> = body.split_whitespace().map(str::parse::<i64>).collect();
                let v = v.map_err(|_| syn(ln, format!("malformed {label} vector")))?;
                if v.len() != cols {
                    return Err(dim(ln, format!("{label} vector has {} entries, expected {cols}", v.len())));
                }
                Ok(v)
            };
            let meridian = vector("meridian")?;
            let longitude = vector("longitude")?;
            h1 = Some(H1Fixture { relations, generators: cols, meridian, longitude });
        } else {
            return Err(syn(ln, format!("unrecognized line '{line}'")));
        }
    }

    Ok(IdealTriangulation {
        name,
        n_tet,
        n_cusps,
        edge_equations,
        cusp_equations,
        max_cusp,
        holonomy,
        h1,
    })
}

fn fmt_coeffs(out: &mut String, eq: &GluingEquation) {
    for (i, c) in eq.coeffs.iter().enumerate() {
        if i > 0 {
            out.push_str(" ;");
        }
        let _ = write!(out, " {} {} {}", c[0], c[1], c[2]);
    }
}

/// Canonical text form; [`parse_triangulation`] inverts it exactly.
pub fn serialize(tri: &IdealTriangulation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", tri.name);
    let _ = writeln!(out, "tet {} cusps {}", tri.n_tet, tri.n_cusps);
    for (k, eq) in tri.edge_equations.iter().enumerate() {
        let _ = write!(out, "edge {k} :");
        fmt_coeffs(&mut out, eq);
        out.push('\n');
    }
    for cusp in &tri.cusp_equations {
        for (label, eq) in [("meridian", &cusp.meridian), ("longitude", &cusp.longitude)] {
            let _ = write!(out, "{label} :");
            fmt_coeffs(&mut out, eq);
            let _ = writeln!(out, " target {}", eq.target_half_turns);
        }
    }
    if let Some((mu, lambda)) = tri.max_cusp {
        let _ = writeln!(out, "maxcusp : {} {} {} {}", mu.re, mu.im, lambda.re, lambda.im);
    }
    if let Some(hol) = &tri.holonomy {
        let _ = writeln!(out, "holonomy mu {} {}", hol.mu_translation.re, hol.mu_translation.im);
        let _ = writeln!(
            out,
            "holonomy lambda {} {}",
            hol.lambda_translation.re, hol.lambda_translation.im
        );
        for g in &hol.generators {
            let _ = writeln!(
                out,
                "holonomy gen {} {} {} {} {} {} {} {}",
                g[0].re, g[0].im, g[1].re, g[1].im, g[2].re, g[2].im, g[3].re, g[3].im
            );
        }
    }
    if let Some(h1) = &tri.h1 {
        let _ = write!(out, "h1 {} : relations {}x{} ;", tri.name, h1.relations.len(), h1.generators);
        for row in &h1.relations {
            for v in row {
                let _ = write!(out, " {v}");
            }
        }
        let _ = write!(out, " ; meridian");
        for v in &h1.meridian {
            let _ = write!(out, " {v}");
        }
        let _ = write!(out, " ; longitude");
        for v in &h1.longitude {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Checks the structural invariants; returns one description per violation.
/// Violations are data, not errors: an empty list means the fixture is sound.
pub fn validate(tri: &IdealTriangulation) -> Vec<String> {
    let mut out = Vec::new();
    if tri.edge_equations.len() != tri.n_tet {
        out.push(format!(
            "edge count: {} edge equations for {} tetrahedra",
            tri.edge_equations.len(),
            tri.n_tet
        ));
    }
    if tri.cusp_equations.len() != tri.n_cusps {
        out.push(format!(
            "cusp count: {} cusp equation pairs for {} cusps",
            tri.cusp_equations.len(),
            tri.n_cusps
        ));
    }
    let mut rows: Vec<(String, &GluingEquation)> = Vec::new();
    for (k, eq) in tri.edge_equations.iter().enumerate() {
        rows.push((format!("edge {k}"), eq));
    }
    for (c, cusp) in tri.cusp_equations.iter().enumerate() {
        rows.push((format!("cusp {c} meridian"), &cusp.meridian));
        rows.push((format!("cusp {c} longitude"), &cusp.longitude));
    }
    for (label, eq) in &rows {
        if eq.coeffs.len() != tri.n_tet {
            out.push(format!("row width: {label} has {} triples, expected {}", eq.coeffs.len(), tri.n_tet));
        }
    }
    for (k, eq) in tri.edge_equations.iter().enumerate() {
        if eq.target_half_turns != 2 {
            out.push(format!("edge target: edge {k} has target {}, expected 2", eq.target_half_turns));
        }
    }
    for (c, cusp) in tri.cusp_equations.iter().enumerate() {
        for (label, eq) in [("meridian", &cusp.meridian), ("longitude", &cusp.longitude)] {
            if eq.target_half_turns != 0 {
                out.push(format!(
                    "peripheral target: cusp {c} {label} has target {}, expected 0",
                    eq.target_half_turns
                ));
            }
        }
    }
    // Each dihedral-angle pair appears twice around the edges.
    for t in 0..tri.n_tet {
        let mut sums = [0i64; 3];
        for eq in &tri.edge_equations {
            if let Some(c) = eq.coeffs.get(t) {
                for (s, v) in sums.iter_mut().zip(c) {
                    *s += v;
                }
            }
        }
        for (axis, s) in ["a", "b", "c"].iter().zip(sums) {
            if s != 2 {
                out.push(format!("coefficient-sum: tetrahedron {t} {axis}-total over edges is {s}, expected 2"));
            }
        }
    }
    let target_sum: i64 = tri.edge_equations.iter().map(|e| e.target_half_turns).sum();
    if target_sum != 2 * tri.n_tet as i64 {
        out.push(format!(
            "target-sum: edge targets total {target_sum} half-turns, expected {}",
            2 * tri.n_tet
        ));
    }
    if let Some(h1) = &tri.h1 {
        for (label, v) in [("meridian", &h1.meridian), ("longitude", &h1.longitude)] {
            if v.len() != h1.generators {
                out.push(format!("h1 {label}: vector length {} for {} generators", v.len(), h1.generators));
            }
        }
    }
    out
}

/// The ten embedded census fixtures, keyed by name.
fn fixture_table() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([
        ("m003", include_str!("../fixtures/m003.txt")),
        ("m004", include_str!("../fixtures/m004.txt")),
        ("m006", include_str!("../fixtures/m006.txt")),
        ("m007", include_str!("../fixtures/m007.txt")),
        ("m009", include_str!("../fixtures/m009.txt")),
        ("m010", include_str!("../fixtures/m010.txt")),
        ("m011", include_str!("../fixtures/m011.txt")),
        ("m015", include_str!("../fixtures/m015.txt")),
        ("m016", include_str!("../fixtures/m016.txt")),
        ("m017", include_str!("../fixtures/m017.txt")),
    ])
}

/// Names of the embedded census fixtures, in order.
pub fn census_names() -> Vec<&'static str> {
    fixture_table().keys().copied().collect()
}

/// Returns the embedded census fixture for `name`.
pub fn census(name: &str) -> Result<IdealTriangulation, TriangulationError> {
    let table = fixture_table();
    match table.get(name) {
        Some(text) => parse_triangulation(text),
        None => Err(TriangulationError::UnknownCensus {
            name: name.to_string(),
            available: census_names().join(", "),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const M004_MINIMAL: &str = "\
name m004
tet 2 cusps 1
edge 0 : 2 1 0 ; 1 0 2
edge 1 : 0 1 2 ; 1 2 0
meridian : 1 0 0 ; 0 -1 0 target 0
longitude : 0 0 0 ; 0 -2 2 target 0
";

    #[test]
    fn parses_minimal_fixture() {
        let tri = parse_triangulation(M004_MINIMAL).unwrap();
        assert_eq!(tri.name, "m004");
        assert_eq!(tri.n_tet, 2);
        assert_eq!(tri.n_cusps, 1);
        assert_eq!(tri.edge_equations[0].coeffs, vec![[2, 1, 0], [1, 0, 2]]);
        assert_eq!(tri.edge_equations[0].target_half_turns, 2);
        assert_eq!(tri.cusp_equations[0].meridian.coeffs, vec![[1, 0, 0], [0, -1, 0]]);
        assert!(validate(&tri).is_empty());
    }

    #[test]
    fn round_trip_is_identity() {
        let tri = parse_triangulation(M004_MINIMAL).unwrap();
        assert_eq!(serialize(&tri), M004_MINIMAL);
        let again = parse_triangulation(&serialize(&tri)).unwrap();
        assert_eq!(again, tri);
    }

    #[test]
    fn empty_input_is_syntax_error() {
        match parse_triangulation("") {
            Err(TriangulationError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_triangulation("# only a comment\n") {
            Err(TriangulationError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn perturbed_coefficient_breaks_sum_invariant() {
        let mut tri = parse_triangulation(M004_MINIMAL).unwrap();
        tri.edge_equations[0].coeffs[0][0] += 1;
        let violations = validate(&tri);
        assert_eq!(violations.len(), 1, "{violations:?}");
        assert!(violations[0].starts_with("coefficient-sum"), "{violations:?}");
    }

    #[test]
    fn wrong_edge_target_is_flagged() {
        let mut tri = parse_triangulation(M004_MINIMAL).unwrap();
        tri.edge_equations[1].target_half_turns = 3;
        let violations = validate(&tri);
        assert!(violations.iter().any(|v| v.starts_with("edge target")), "{violations:?}");
    }

    #[test]
    fn slope_normalization_identifies_negation() {
        assert_eq!(Slope::new(-3, 1), Slope::new(3, -1));
        assert_eq!(Slope::new(0, -2), Slope::new(0, 2));
        assert_eq!(Slope::new(6, -9).multiplicity(), 3);
        assert_eq!(Slope::new(6, -9).primitive(), Slope::new(2, -3));
    }

    #[test]
    #[should_panic(expected = "must not both vanish")]
    fn zero_slope_rejected() {
        let _ = Slope::new(0, 0);
    }

    #[test]
    fn unknown_census_name_lists_available() {
        match census("m000") {
            Err(TriangulationError::UnknownCensus { available, .. }) => {
                assert!(available.contains("m004"));
            }
            other => panic!("expected unknown-census error, got {other:?}"),
        }
    }
}
