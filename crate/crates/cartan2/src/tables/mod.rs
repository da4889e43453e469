//! The built-in classification dataset and the machinery around it:
//! instantiating rows into concrete diagrams, verifying a row's expected
//! orbit data, matching a diagram back to its row, and exhaustively searching
//! all torsion diagrams of a given modulus against the dataset.
//!
//! Rows are stored in an embedded, versioned JSON file. A row consists of
//! parameter constraints (a fixed-order root of unity, or a free scalar with
//! excluded orders, plus side conditions), one or more diagram families given
//! as signed monomials in the parameters, and the expected orbit invariants:
//! the double-reflection period `n`, the number `l`, the accepted window, and
//! the full point list of the exchange graph (family index, vertex swap).
//!
//! Characteristic 2 collapses `-1` to `1`; its table is encoded separately in
//! the forms it takes there rather than derived from the master rows.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, lcm};
use crate::diagram::Rank2Diagram;
use crate::finiteness::{decide_finite_orbit, FinitenessVerdict};
use crate::reflection::{orbit, OrbitError};
use crate::units::{Unit, UnitError, UnitGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("unknown row id {0:?} for characteristic {1}")]
    UnknownRow(String, u64),
    #[error(transparent)]
    Unit(#[from] UnitError),
}

/// Which characteristics a row applies to.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CharConstraint {
    Eq { eq: u64 },
    NotIn { not: Vec<u64> },
    Any(String),
}

impl CharConstraint {
    pub fn admits(&self, p: u64) -> bool {
        match self {
            CharConstraint::Eq { eq } => *eq == p,
            CharConstraint::NotIn { not } => !not.contains(&p),
            CharConstraint::Any(tag) => {
                debug_assert_eq!(tag, "any");
                true
            }
        }
    }
}

/// Order constraint on one parameter: a primitive root of exact order, or an
/// arbitrary scalar with some orders excluded.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OrderConstraint {
    Exactly { exactly: u64 },
    NotIn { not: Vec<u64> },
}

#[derive(Debug, Clone, Deserialize)]
pub struct Param {
    pub name: String,
    pub order: OrderConstraint,
}

/// `(-1)^neg · Π params[i]^{e[i]}`.
#[derive(Debug, Clone, Deserialize)]
pub struct Monomial {
    #[serde(default)]
    pub neg: bool,
    pub e: Vec<i64>,
}

impl Monomial {
    /// Evaluates the unsigned part `Π params^e`.
    fn eval_unsigned(&self, params: &[Unit]) -> Unit {
        let mut acc = params
            .first()
            .map(|u| u.group().one())
            .expect("monomial evaluation needs at least one parameter")
            .clone();
        for (u, &e) in params.iter().zip(&self.e) {
            acc = &acc * &u.pow(e);
        }
        acc
    }

    fn eval(&self, group: &UnitGroup, params: &[Unit]) -> Unit {
        let base = if params.is_empty() {
            group.one()
        } else {
            self.eval_unsigned(params)
        };
        if self.neg {
            let minus = group.minus_one().expect("instantiation group contains -1");
            &base * &minus
        } else {
            base
        }
    }

    /// Whether the full signed monomial evaluates to 1.
    fn is_one_at(&self, params: &[Unit], p: u64) -> bool {
        let base = self.eval_unsigned(params);
        if self.neg {
            // base·(-1) = 1 iff base = -1.
            if p == 2 {
                base.is_one()
            } else {
                base.order() == crate::units::Order::Finite(2)
            }
        } else {
            base.is_one()
        }
    }
}

/// One diagram family in table order: left vertex, edge, right vertex.
#[derive(Debug, Clone, Deserialize)]
pub struct Family {
    pub v1: Monomial,
    pub edge: Monomial,
    pub v2: Monomial,
}

/// A classification row with its expected exchange-graph data.
#[derive(Debug, Clone, Deserialize)]
pub struct TableRow {
    pub id: String,
    #[serde(rename = "char")]
    pub char_constraint: CharConstraint,
    pub params: Vec<Param>,
    pub forbid: Vec<Monomial>,
    pub families: Vec<Family>,
    pub n: usize,
    pub l: i64,
    pub window: Vec<i64>,
    /// Exchange-graph points as `(family index, vertex swap)`.
    pub points: Vec<(usize, bool)>,
}

impl TableRow {
    /// Whether any family label or side condition mentions `-1`.
    pub fn uses_minus_one(&self) -> bool {
        self.families
            .iter()
            .flat_map(|f| [&f.v1, &f.edge, &f.v2])
            .chain(&self.forbid)
            .any(|m| m.neg)
    }
}

#[derive(Debug, Deserialize)]
pub struct ClassificationData {
    pub version: u32,
    pub master: Vec<TableRow>,
    pub char2: Vec<TableRow>,
}

static DATA: LazyLock<ClassificationData> = LazyLock::new(|| {
    serde_json::from_str(include_str!("data.json")).expect("embedded classification data parses")
});

pub fn dataset() -> &'static ClassificationData {
    &DATA
}

/// The rows applying in characteristic `p`, in table order.
pub fn rows_for(p: u64) -> Vec<&'static TableRow> {
    let source = if p == 2 { &DATA.char2 } else { &DATA.master };
    source
        .iter()
        .filter(|r| r.char_constraint.admits(p))
        .collect()
}

pub fn row(p: u64, id: &str) -> Result<&'static TableRow, TableError> {
    rows_for(p)
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| TableError::UnknownRow(id.to_string(), p))
}

/// A concrete value for one row parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamValue {
    /// The `index`-th primitive root of the given order (`gcd(index, order) = 1`).
    Root { order: u64, index: u64 },
    /// A generic (infinite order) scalar.
    Free,
}

pub type Assignment = Vec<ParamValue>;

fn check_value_order(param: &Param, value: &ParamValue) -> Result<(), TableError> {
    match (&param.order, value) {
        (OrderConstraint::Exactly { exactly }, ParamValue::Root { order, .. })
            if order == exactly =>
        {
            Ok(())
        }
        (OrderConstraint::Exactly { exactly }, _) => Err(TableError::ConstraintViolated(format!(
            "parameter {} must be a primitive root of order {exactly}",
            param.name
        ))),
        (OrderConstraint::NotIn { not }, ParamValue::Root { order, .. }) => {
            if not.contains(order) {
                Err(TableError::ConstraintViolated(format!(
                    "parameter {} may not have order {order}",
                    param.name
                )))
            } else {
                Ok(())
            }
        }
        (OrderConstraint::NotIn { .. }, ParamValue::Free) => Ok(()),
    }
}

/// Instantiates every family of a row at a parameter assignment.
///
/// The unit group has torsion modulus the lcm of the assigned orders, doubled
/// when the row mentions `-1` in odd characteristic, and one free generator
/// per [`ParamValue::Free`].
pub fn instantiate_row(
    row: &TableRow,
    p: u64,
    assignment: &Assignment,
) -> Result<Vec<Rank2Diagram>, TableError> {
    if !row.char_constraint.admits(p) {
        return Err(TableError::ConstraintViolated(format!(
            "row {} does not apply in characteristic {p}",
            row.id
        )));
    }
    if assignment.len() != row.params.len() {
        return Err(TableError::ConstraintViolated(format!(
            "row {} takes {} parameters, got {}",
            row.id,
            row.params.len(),
            assignment.len()
        )));
    }
    for (param, value) in row.params.iter().zip(assignment) {
        check_value_order(param, value)?;
        if let ParamValue::Root { order, index } = value {
            if *order == 0 || (*order > 1 && gcd(*index % *order, *order) != 1) {
                return Err(TableError::ConstraintViolated(format!(
                    "index {index} is not coprime to order {order}"
                )));
            }
        }
    }

    let mut torsion = 1u64;
    let mut free_rank = 0usize;
    for value in assignment {
        match value {
            ParamValue::Root { order, .. } => torsion = lcm(torsion, *order),
            ParamValue::Free => free_rank += 1,
        }
    }
    if row.uses_minus_one() && p != 2 {
        torsion = lcm(torsion, 2);
    }
    let group = UnitGroup::new(p, torsion, free_rank)
        .map_err(|e| TableError::ConstraintViolated(e.to_string()))?;

    let mut params = Vec::with_capacity(assignment.len());
    let mut next_free = 0usize;
    for value in assignment {
        match value {
            ParamValue::Root { order, index } => {
                let step = (torsion / order) as i64;
                params.push(group.unit(&[], step * *index as i64));
            }
            ParamValue::Free => {
                params.push(group.free_gen(next_free));
                next_free += 1;
            }
        }
    }

    for forbidden in &row.forbid {
        if forbidden.is_one_at(&params, p) {
            return Err(TableError::ConstraintViolated(format!(
                "row {} side condition fails at this assignment",
                row.id
            )));
        }
    }

    row.families
        .iter()
        .map(|f| {
            let v1 = f.v1.eval(&group, &params);
            let v2 = f.v2.eval(&group, &params);
            let edge = f.edge.eval(&group, &params);
            Rank2Diagram::new(v1, v2, edge).map_err(TableError::from)
        })
        .collect()
}

/// Result of checking one row instantiation against the decision procedure.
#[derive(Debug, Clone, Serialize)]
pub struct RowReport {
    pub row: String,
    pub p: u64,
    pub diagrams: Vec<Rank2Diagram>,
    pub verdict: FinitenessVerdict,
    pub mismatches: Vec<String>,
}

impl RowReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verifies a row at an assignment: the first family's diagram must decide
/// finite with the row's `(n, l, window)`, and the orbit's point set must be
/// exactly the instantiated families closed under the listed vertex swaps.
pub fn verify_row(
    row: &TableRow,
    p: u64,
    assignment: &Assignment,
) -> Result<RowReport, TableError> {
    let diagrams = instantiate_row(row, p, assignment)?;
    let mut mismatches = Vec::new();

    let base = &diagrams[0];
    let graph = match orbit(base, crate::reflection::DEFAULT_ORBIT_CAP) {
        Ok(g) => g,
        Err(e) => {
            return Ok(RowReport {
                row: row.id.clone(),
                p,
                diagrams,
                verdict: match e {
                    OrbitError::NotAllReflections => FinitenessVerdict::NotAllReflections,
                    OrbitError::Diverged { cap } => {
                        FinitenessVerdict::Inconclusive { cap_hit: cap }
                    }
                },
                mismatches: vec!["orbit closure failed".into()],
            })
        }
    };
    let verdict = decide_finite_orbit(&graph);

    match &verdict {
        FinitenessVerdict::Finite { n, l, sequence, .. } => {
            if *n != row.n {
                mismatches.push(format!("period n = {n}, table says {}", row.n));
            }
            if *l != row.l {
                mismatches.push(format!("l = {l}, table says {}", row.l));
            }
            if *sequence != row.window {
                mismatches.push(format!("window {sequence:?}, table says {:?}", row.window));
            }
        }
        other => mismatches.push(format!("verdict {:?}, expected finite", other.tag())),
    }

    let expected: BTreeSet<Rank2Diagram> = row
        .points
        .iter()
        .map(|&(fam, swap)| {
            let d = &diagrams[fam];
            if swap {
                d.tau()
            } else {
                d.clone()
            }
        })
        .collect();
    if expected.len() != row.points.len() {
        mismatches.push("expected exchange-graph points are not pairwise distinct".into());
    }
    let actual: BTreeSet<Rank2Diagram> = graph.points().iter().cloned().collect();
    if actual != expected {
        mismatches.push(format!(
            "orbit has {} points, table lists {}; sets {}",
            actual.len(),
            expected.len(),
            if actual == expected {
                "agree"
            } else {
                "differ"
            }
        ));
    }

    Ok(RowReport {
        row: row.id.clone(),
        p,
        diagrams,
        verdict,
        mismatches,
    })
}

/// Torsion orders offered to free-scalar parameters when building default
/// verification assignments.
fn admissible_q_orders(p: u64, excluded: &[u64]) -> Vec<u64> {
    [1u64, 2, 3, 4, 5, 7, 8, 9, 11, 13]
        .into_iter()
        .filter(|d| gcd(*d, p) == 1 && !excluded.contains(d))
        .collect()
}

/// Default assignments for a row: exact parameters at their first primitive
/// root, free-scalar parameters at a few admissible torsion orders plus one
/// generic run.
pub fn default_assignments(row: &TableRow, p: u64) -> Vec<Assignment> {
    let mut per_param: Vec<Vec<ParamValue>> = Vec::new();
    let mut has_free_scalar = false;
    for param in &row.params {
        match &param.order {
            OrderConstraint::Exactly { exactly } => {
                per_param.push(vec![ParamValue::Root {
                    order: *exactly,
                    index: 1,
                }]);
            }
            OrderConstraint::NotIn { not } => {
                has_free_scalar = true;
                let choices: Vec<ParamValue> = admissible_q_orders(p, not)
                    .into_iter()
                    .take(3)
                    .map(|d| ParamValue::Root { order: d, index: 1 })
                    .collect();
                per_param.push(choices);
            }
        }
    }

    let mut assignments = vec![Vec::new()];
    for choices in &per_param {
        let mut next = Vec::new();
        for partial in &assignments {
            for &choice in choices {
                let mut a = partial.clone();
                a.push(choice);
                next.push(a);
            }
        }
        assignments = next;
    }
    // Side conditions can reject individual assignments (e.g. q = ζ).
    assignments.retain(|a| instantiate_row(row, p, a).is_ok());

    if has_free_scalar {
        let generic: Assignment = row
            .params
            .iter()
            .map(|param| match &param.order {
                OrderConstraint::Exactly { exactly } => ParamValue::Root {
                    order: *exactly,
                    index: 1,
                },
                OrderConstraint::NotIn { .. } => ParamValue::Free,
            })
            .collect();
        assignments.push(generic);
    }
    assignments
}

/// Matches an all-torsion diagram against the rows for its characteristic,
/// trying the diagram and its vertex swap; returns the first matching row id.
pub fn match_diagram_to_row(d: &Rank2Diagram) -> Option<String> {
    if !d.is_torsion() {
        return None;
    }
    let p = d.group().p();
    for row in rows_for(p) {
        if row_matches(row, d) || row_matches(row, &d.tau()) {
            return Some(row.id.clone());
        }
    }
    None
}

fn row_matches(row: &TableRow, d: &Rank2Diagram) -> bool {
    let p = d.group().p();
    let n = d.group().torsion();
    // Ambient modulus: the diagram's, -1, and every exact parameter order.
    let mut ambient = n;
    if p != 2 {
        ambient = lcm(ambient, 2);
    }
    for param in &row.params {
        if let OrderConstraint::Exactly { exactly } = param.order {
            if gcd(exactly, p) != 1 {
                return false;
            }
            ambient = lcm(ambient, exactly);
        }
    }
    let group = match UnitGroup::new(p, ambient, 0) {
        Ok(g) => g,
        Err(_) => return false,
    };
    let scale = (ambient / n) as i64;
    let embed = |u: &Unit| group.unit(&[], u.torsion_exp() as i64 * scale);
    let labels = [embed(d.q11()), embed(d.q0()), embed(d.q22())];

    row.families.iter().any(|family| {
        solve_family(
            row,
            family,
            &group,
            &labels,
            &mut vec![None; row.params.len()],
            0,
        )
    })
}

/// Backtracking search for parameter values making `family` evaluate to
/// `labels = [v1, edge, v2]`. Exact-order parameters range over the primitive
/// roots of their order; free scalars are pinned from a label where they
/// occur with exponent ±1 and all still-unresolved parameters are absent,
/// falling back to full enumeration.
fn solve_family(
    row: &TableRow,
    family: &Family,
    group: &UnitGroup,
    labels: &[Unit; 3],
    resolved: &mut Vec<Option<Unit>>,
    idx: usize,
) -> bool {
    let p = group.p();
    if idx == row.params.len() {
        let params: Vec<Unit> = resolved.iter().map(|v| v.clone().unwrap()).collect();
        for forbidden in &row.forbid {
            if forbidden.is_one_at(&params, p) {
                return false;
            }
        }
        let monomials = [&family.v1, &family.edge, &family.v2];
        return monomials
            .iter()
            .zip(labels)
            .all(|(m, label)| m.eval(group, &params) == *label);
    }

    let candidates: Vec<Unit> = match &row.params[idx].order {
        OrderConstraint::Exactly { exactly } => {
            let step = (group.torsion() / exactly) as i64;
            (1..=*exactly)
                .filter(|j| gcd(*j, *exactly) == 1)
                .map(|j| group.unit(&[], step * j as i64))
                .collect()
        }
        OrderConstraint::NotIn { not } => {
            let pinned = pin_candidate(family, labels, resolved, idx, group);
            let pool: Vec<Unit> = match pinned {
                Some(u) => vec![u],
                None => group.torsion_units().collect(),
            };
            pool.into_iter()
                .filter(|u| match u.order() {
                    crate::units::Order::Finite(ord) => !not.contains(&ord),
                    crate::units::Order::Infinite => unreachable!("torsion candidates only"),
                })
                .collect()
        }
    };

    for candidate in candidates {
        resolved[idx] = Some(candidate);
        if solve_family(row, family, group, labels, resolved, idx + 1) {
            resolved[idx] = None;
            return true;
        }
    }
    resolved[idx] = None;
    false
}

/// The forced value of parameter `idx` from a label where it has exponent ±1
/// and every other unresolved parameter has exponent 0.
fn pin_candidate(
    family: &Family,
    labels: &[Unit; 3],
    resolved: &[Option<Unit>],
    idx: usize,
    group: &UnitGroup,
) -> Option<Unit> {
    let monomials = [&family.v1, &family.edge, &family.v2];
    for (m, label) in monomials.iter().zip(labels) {
        let e_self = *m.e.get(idx).unwrap_or(&0);
        if e_self != 1 && e_self != -1 {
            continue;
        }
        let others_ok =
            m.e.iter()
                .enumerate()
                .all(|(j, &e)| j == idx || e == 0 || resolved[j].is_some());
        if !others_ok {
            continue;
        }
        // label = (-1)^neg · Π_resolved · candidate^{e_self}
        let mut known = if m.neg {
            group.minus_one()?
        } else {
            group.one()
        };
        for (j, &e) in m.e.iter().enumerate() {
            if j != idx && e != 0 {
                known = &known * &resolved[j].as_ref().unwrap().pow(e);
            }
        }
        let residue = label * &known.inv();
        return Some(if e_self == 1 { residue } else { residue.inv() });
    }
    None
}

/// One entry of the finite list produced by [`search_batch`].
#[derive(Debug, Clone, Serialize)]
pub struct FiniteEntry {
    pub diagram: Rank2Diagram,
    pub row: Option<String>,
    pub n: usize,
    pub l: i64,
    pub roots: usize,
}

/// A table instance the scan failed to recognize as finite.
#[derive(Debug, Clone, Serialize)]
pub struct MissingInstance {
    pub row: String,
    pub diagram: Rank2Diagram,
}

/// Outcome of scanning all torsion diagrams of one modulus.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub p: u64,
    pub torsion: u64,
    pub scanned: usize,
    pub finite: Vec<FiniteEntry>,
    pub unmatched_finite: Vec<Rank2Diagram>,
    pub instances_not_found: Vec<MissingInstance>,
}

impl SearchReport {
    /// Both discrepancy lists empty: the scan agrees with the dataset.
    pub fn is_clean(&self) -> bool {
        self.unmatched_finite.is_empty() && self.instances_not_found.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "p={} N={}: scanned {} diagrams, {} finite, {} unmatched, {} instances missing",
            self.p,
            self.torsion,
            self.scanned,
            self.finite.len(),
            self.unmatched_finite.len(),
            self.instances_not_found.len()
        )
    }
}

/// Scans all vertex-swap-canonical torsion triples over `μ_N`, decides each,
/// matches every finite diagram to a row, and cross-checks that every table
/// instance representable over `μ_N` was found finite.
pub fn search_batch(p: u64, n_torsion: u64, cap: usize) -> Result<SearchReport, TableError> {
    let group = UnitGroup::new(p, n_torsion, 0).map_err(TableError::from)?;
    let n = n_torsion;

    let mut triples = Vec::new();
    for e11 in 0..n {
        for e22 in e11..n {
            for e0 in 0..n {
                triples.push((e11, e22, e0));
            }
        }
    }
    // Torsion orbits live inside μ_N³, so never report divergence below that.
    let effective_cap = cap.max((n * n * n) as usize + 1);

    let mut finite: Vec<FiniteEntry> = triples
        .par_iter()
        .filter_map(|&(e11, e22, e0)| {
            let d = Rank2Diagram::new(
                group.unit(&[], e11 as i64),
                group.unit(&[], e22 as i64),
                group.unit(&[], e0 as i64),
            )
            .expect("same group");
            match crate::finiteness::decide_finite(&d, effective_cap) {
                FinitenessVerdict::Finite { n, l, roots, .. } => Some(FiniteEntry {
                    row: match_diagram_to_row(&d),
                    diagram: d,
                    n,
                    l,
                    roots,
                }),
                _ => None,
            }
        })
        .collect();
    finite.sort_by(|a, b| a.diagram.cmp(&b.diagram));

    let unmatched_finite: Vec<Rank2Diagram> = finite
        .iter()
        .filter(|e| e.row.is_none())
        .map(|e| e.diagram.clone())
        .collect();

    let finite_set: BTreeSet<Rank2Diagram> = finite.iter().map(|e| e.diagram.clone()).collect();
    let mut instances_not_found = Vec::new();
    for (row_id, diagram) in enumerate_instances(p, n_torsion)? {
        if !finite_set.contains(&diagram.tau_canonical()) {
            instances_not_found.push(MissingInstance {
                row: row_id,
                diagram,
            });
        }
    }

    Ok(SearchReport {
        p,
        torsion: n_torsion,
        scanned: triples.len(),
        finite,
        unmatched_finite,
        instances_not_found,
    })
}

/// All `(row id, diagram)` instances whose labels lie in `μ_N`.
fn enumerate_instances(p: u64, n: u64) -> Result<Vec<(String, Rank2Diagram)>, TableError> {
    let group = UnitGroup::new(p, n, 0).map_err(TableError::from)?;
    let mut seen: BTreeSet<Rank2Diagram> = BTreeSet::new();
    let mut out = Vec::new();
    for row in rows_for(p) {
        if row.uses_minus_one() && p != 2 && !n.is_multiple_of(2) {
            continue; // -1 is not in μ_N
        }
        // Per-parameter candidate exponent lists within μ_N.
        let mut candidate_lists: Vec<Vec<u64>> = Vec::new();
        let mut representable = true;
        for param in &row.params {
            match &param.order {
                OrderConstraint::Exactly { exactly } => {
                    if !n.is_multiple_of(*exactly) {
                        representable = false;
                        break;
                    }
                    let step = n / exactly;
                    candidate_lists.push(
                        (1..=*exactly)
                            .filter(|j| gcd(*j, *exactly) == 1)
                            .map(|j| step * j % n)
                            .collect(),
                    );
                }
                OrderConstraint::NotIn { not } => {
                    candidate_lists.push(
                        (0..n)
                            .filter(|&e| {
                                let ord = n / gcd(n, e);
                                !not.contains(&ord)
                            })
                            .collect(),
                    );
                }
            }
        }
        if !representable {
            continue;
        }
        let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
        for list in &candidate_lists {
            let mut next = Vec::new();
            for t in &tuples {
                for &e in list {
                    let mut t2 = t.clone();
                    t2.push(e);
                    next.push(t2);
                }
            }
            tuples = next;
        }
        for tuple in tuples {
            let params: Vec<Unit> = tuple.iter().map(|&e| group.unit(&[], e as i64)).collect();
            if row.forbid.iter().any(|f| f.is_one_at(&params, p)) {
                continue;
            }
            for family in &row.families {
                let d = Rank2Diagram::new(
                    family.v1.eval(&group, &params),
                    family.v2.eval(&group, &params),
                    family.edge.eval(&group, &params),
                )
                .expect("same group");
                let canonical = d.tau_canonical();
                if seen.insert(canonical.clone()) {
                    out.push((row.id.clone(), canonical));
                }
            }
        }
    }
    Ok(out)
}

/// Runs [`search_batch`] for each modulus in `orders`.
pub fn search(p: u64, orders: &[u64], cap: usize) -> Result<Vec<SearchReport>, TableError> {
    orders.iter().map(|&n| search_batch(p, n, cap)).collect()
}

/// The divisor-closed moduli covering the dataset's parameter orders for the
/// supported search characteristics.
pub fn acceptance_orders(p: u64) -> Vec<u64> {
    let base: &[u64] = match p {
        2 => &[9, 15, 7, 5, 3],
        3 => &[20, 14, 10, 8, 5, 4],
        5 => &[24, 18, 12, 8, 14, 6, 4],
        7 => &[24, 20, 15, 12, 9, 8, 10, 6],
        _ => &[24, 20, 15, 12, 9, 8, 7, 6],
    };
    let mut set = BTreeSet::new();
    for &b in base {
        for d in 1..=b {
            if b % d == 0 && gcd(d, p) == 1 {
                set.insert(d);
            }
        }
    }
    set.into_iter().collect()
}

/// Whether the braided vector space behind `d` has a finite-dimensional
/// Nichols algebra: the decision must be finite and every label of every
/// orbit point must be a root of unity (including 1).
pub fn is_finite_dimensional(d: &Rank2Diagram, cap: usize) -> bool {
    match orbit(d, cap) {
        Ok(g) => decide_finite_orbit(&g).is_finite() && g.points().iter().all(|pt| pt.is_torsion()),
        Err(_) => false,
    }
}
