//! Brute-force verification over the universe of Hölder-presentable groups.
//!
//! Every `(m, n)`-bicyclic group has order `m·n / |⟨a⟩ ∩ ⟨b⟩|`, and the
//! intersection order divides `gcd(m, n)`. So for each divisor `d` of
//! `gcd(m, n)` we enumerate every presentation `(m′, n′, r, s)` with
//! `m′·n′ = m·n/d`, search it for `(m, n)`-factorizations, and test
//! whatever property is at stake on the groups that admit one. No
//! isomorphism reduction is done.
//!
//! Groups that are bicyclic but not metacyclic (certain 2-groups) lie
//! outside this universe; reports carry `universe: "holder"` to say so.
//!
//! Sweeps run on rayon. Results are collected in input order and merged
//! by a fixed reduction, so output does not depend on the worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{BicyclicWitness, GroupProfile};
use crate::classifier::{
    self, build_nonabelian_witness, build_nonnilpotent_witness, classify_pair_with,
    cyclic_pair_with, nilpotent_pair_with, singular_pair_with, ClassifierError, NumberClass,
    NumberData,
};
use crate::group::{FiniteGroup, GroupError, HolderPresentation};
use crate::numtheory::{self, gcd, pow_mod, NumError};

/// Default bound on `m·n` for [`verify_pair_exhaustive`].
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 2000;

/// Euler–Mascheroni constant to 20 decimal places.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

pub const UNIVERSE: &str = "holder";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("m·n = {product} exceeds the exhaustive cap {cap}")]
    CapExceeded { product: u64, cap: u64 },
    #[error("x = {0} is below 16; log log log x is not positive")]
    EstimateDomain(u64),
    #[error("x must be at least 1")]
    EmptyRange,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// Every valid Hölder presentation of a group of the given order, ordered
/// by `(m, n, r, s)`.
pub fn holder_presentations(order: u64) -> Vec<HolderPresentation> {
    let Ok(fac) = numtheory::factorize(order) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for m in fac.divisors() {
        let n = order / m;
        if m == 1 {
            out.push(HolderPresentation { m, n, r: 0, s: 0 });
            continue;
        }
        for r in 1..m {
            if gcd(r, m) != 1 || pow_mod(r, n, m) != 1 {
                continue;
            }
            // (r - 1)s ≡ 0 (mod m)  ⇔  s ≡ 0 (mod m / gcd(r - 1, m))
            let step = m / gcd(r - 1, m);
            out.extend(
                (0..m)
                    .step_by(step as usize)
                    .map(|s| HolderPresentation { m, n, r, s }),
            );
        }
    }
    out
}

/// Admissible orders `m·n/d` for `d | gcd(m, n)`, ascending.
pub fn admissible_orders(m: u64, n: u64) -> Vec<u64> {
    let Ok(fac) = numtheory::factorize(gcd(m, n)) else {
        return Vec::new();
    };
    let mut orders: Vec<u64> = fac.divisors().iter().map(|d| m * n / d).collect();
    orders.sort_unstable();
    orders
}

/// A non-nilpotent realization found by the exhaustive scan.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub presentation: HolderPresentation,
    pub witness: BicyclicWitness,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub universe: &'static str,
    pub m: u64,
    pub n: u64,
    /// Whether the pair satisfies the nilpotency criterion.
    pub predicate: bool,
    pub orders_scanned: Vec<u64>,
    pub presentations_scanned: u64,
    /// Presentations admitting at least one `(m, n)`-factorization.
    pub realizing_groups: u64,
    /// Factorizations found, counted as ordered pairs of cyclic subgroups.
    pub realizations_found: u64,
    pub all_nilpotent: bool,
    /// The two nilpotency tests agreed on every scanned group, and every
    /// group of prime-power order tested nilpotent.
    pub algorithms_agree: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    /// The criterion and the scan agree: nilpotent pairs have no
    /// counterexamples, failing pairs have at least one.
    pub fn is_consistent(&self) -> bool {
        self.algorithms_agree && self.predicate == self.counterexamples.is_empty()
    }
}

struct GroupScan {
    realizations: u64,
    nilpotent: bool,
    agree: bool,
    counterexample: Option<Counterexample>,
}

fn scan_presentation(pres: HolderPresentation, m: u64, n: u64) -> Result<GroupScan> {
    let group = FiniteGroup::holder(pres)?;
    let profile = GroupProfile::new(&group);
    let sylow = profile.is_nilpotent_sylow();
    let coprime = profile.is_nilpotent_coprime();
    let prime_power = numtheory::factorize(pres.order())?
        .prime_power_base()
        .is_some();
    let agree = sylow == coprime && (sylow || !prime_power);
    let mut ws = profile.factorizations(m, n, None);
    let realizations = ws.len() as u64;
    let nilpotent = realizations == 0 || (sylow && coprime);
    let counterexample = (!nilpotent).then(|| Counterexample {
        presentation: pres,
        witness: ws.swap_remove(0),
    });
    Ok(GroupScan {
        realizations,
        nilpotent,
        agree,
        counterexample,
    })
}

/// Scans every Hölder group of every admissible order for `(m, n)`-factorizations
/// and tests each realizing group with both nilpotency algorithms.
pub fn verify_pair_exhaustive(m: u64, n: u64) -> Result<VerificationReport> {
    verify_pair_exhaustive_with_cap(m, n, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn verify_pair_exhaustive_with_cap(m: u64, n: u64, cap: u64) -> Result<VerificationReport> {
    if m == 0 || n == 0 {
        return Err(ClassifierError::ZeroInput.into());
    }
    let product = m.saturating_mul(n);
    if product > cap {
        return Err(OracleError::CapExceeded { product, cap });
    }
    let orders = admissible_orders(m, n);
    let presentations: Vec<HolderPresentation> = orders
        .iter()
        .flat_map(|&order| holder_presentations(order))
        .collect();
    let scans = presentations
        .par_iter()
        .map(|&p| scan_presentation(p, m, n))
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport {
        universe: UNIVERSE,
        m,
        n,
        predicate: classifier::is_nilpotent_pair(m, n),
        orders_scanned: orders,
        presentations_scanned: presentations.len() as u64,
        realizing_groups: 0,
        realizations_found: 0,
        all_nilpotent: true,
        algorithms_agree: true,
        counterexamples: Vec::new(),
    };
    for scan in scans {
        if scan.realizations > 0 {
            report.realizing_groups += 1;
        }
        report.realizations_found += scan.realizations;
        report.all_nilpotent &= scan.nilpotent;
        report.algorithms_agree &= scan.agree;
        report.counterexamples.extend(scan.counterexample);
    }
    Ok(report)
}

/// A pair on which an implementation check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub m: u64,
    pub n: u64,
    pub reason: String,
}

fn grid(x: u64, order_cap: u64) -> Vec<(u64, u64)> {
    (1..=x)
        .flat_map(|m| (1..=x).map(move |n| (m, n)))
        .filter(|&(m, n)| m * n <= order_cap)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseAnalysisSweep {
    pub x: u64,
    pub pairs_checked: u64,
    pub satisfying_pairs: u64,
    pub odd_cross: u64,
    pub both_even: u64,
    pub mixed_parity: u64,
    /// First pair (row-major) where the gcd test and the case analysis disagree.
    pub discrepancy: Option<(u64, u64)>,
}

impl CaseAnalysisSweep {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none()
    }
}

fn number_table(x: u64) -> Result<Vec<NumberData>> {
    (1..=x)
        .into_par_iter()
        .map(|k| NumberData::new(k).map_err(OracleError::from))
        .collect()
}

/// For every `1 ≤ m, n ≤ x`, checks that the gcd criterion fails exactly
/// when a parity/prime failure case applies, and that the case re-verifies.
pub fn sweep_case_analysis(x: u64) -> Result<CaseAnalysisSweep> {
    if x == 0 {
        return Err(OracleError::EmptyRange);
    }
    let table = number_table(x)?;
    #[derive(Default, Clone, Copy)]
    struct Row {
        satisfying: u64,
        cases: [u64; 3],
        discrepancy: Option<(u64, u64)>,
    }
    let rows: Vec<Row> = table
        .par_iter()
        .map(|a| {
            let mut row = Row::default();
            for b in &table {
                let c = classify_pair_with(a, b);
                if c.satisfies_mcond {
                    row.satisfying += 1;
                }
                match c.failure_case() {
                    Some(classifier::FailureCase::OddCross { .. }) => row.cases[0] += 1,
                    Some(classifier::FailureCase::BothEven { .. }) => row.cases[1] += 1,
                    Some(classifier::FailureCase::MixedParity { .. }) => row.cases[2] += 1,
                    None => {}
                }
                if row.discrepancy.is_none() && !c.is_consistent() {
                    row.discrepancy = Some((a.value, b.value));
                }
            }
            row
        })
        .collect();
    Ok(CaseAnalysisSweep {
        x,
        pairs_checked: x * x,
        satisfying_pairs: rows.iter().map(|r| r.satisfying).sum(),
        odd_cross: rows.iter().map(|r| r.cases[0]).sum(),
        both_even: rows.iter().map(|r| r.cases[1]).sum(),
        mixed_parity: rows.iter().map(|r| r.cases[2]).sum(),
        discrepancy: rows.iter().find_map(|r| r.discrepancy),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NilpotencySweep {
    pub universe: &'static str,
    pub x: u64,
    pub order_cap: u64,
    pub pairs_checked: u64,
    pub nilpotent_pairs_verified: u64,
    pub failing_pairs_witnessed: u64,
    pub presentations_scanned: u64,
    pub realizations_found: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl NilpotencySweep {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

enum PairOutcome {
    Verified(VerificationReport),
    Witnessed,
    Failed(Discrepancy),
}

fn nilpotency_pair(m: u64, n: u64, order_cap: u64) -> PairOutcome {
    let fail = |reason: String| PairOutcome::Failed(Discrepancy { m, n, reason });
    if classifier::is_nilpotent_pair(m, n) {
        match verify_pair_exhaustive_with_cap(m, n, order_cap) {
            Ok(r) if r.all_nilpotent && r.is_consistent() => PairOutcome::Verified(r),
            Ok(r) => fail(format!(
                "{} non-nilpotent realization(s), algorithms agree: {}",
                r.counterexamples.len(),
                r.algorithms_agree
            )),
            Err(e) => fail(e.to_string()),
        }
    } else {
        match build_nonnilpotent_witness(m, n) {
            Ok(w) => match w.witness.reverify() {
                Ok(()) => PairOutcome::Witnessed,
                Err(e) => fail(e.to_string()),
            },
            Err(e) => fail(e.to_string()),
        }
    }
}

/// Both directions of the nilpotency criterion for all `m, n ≤ x` with
/// `m·n ≤ order_cap`: exhaustive search when the criterion holds, an
/// explicit non-nilpotent witness when it fails.
pub fn sweep_nilpotency(x: u64, order_cap: u64) -> NilpotencySweep {
    let pairs = grid(x, order_cap);
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(m, n)| nilpotency_pair(m, n, order_cap))
        .collect();
    let mut sweep = NilpotencySweep {
        universe: UNIVERSE,
        x,
        order_cap,
        pairs_checked: pairs.len() as u64,
        nilpotent_pairs_verified: 0,
        failing_pairs_witnessed: 0,
        presentations_scanned: 0,
        realizations_found: 0,
        discrepancies: Vec::new(),
    };
    for o in outcomes {
        match o {
            PairOutcome::Verified(r) => {
                sweep.nilpotent_pairs_verified += 1;
                sweep.presentations_scanned += r.presentations_scanned;
                sweep.realizations_found += r.realizations_found;
            }
            PairOutcome::Witnessed => sweep.failing_pairs_witnessed += 1,
            PairOutcome::Failed(d) => sweep.discrepancies.push(d),
        }
    }
    sweep
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureSweep {
    pub universe: &'static str,
    pub x: u64,
    pub order_cap: u64,
    pub singular_pairs: u64,
    pub cyclic_pairs: u64,
    /// Presentations searched for a forbidden realization.
    pub groups_searched: u64,
    /// Groups on which both nilpotency tests were run and compared.
    pub nilpotency_cross_checks: u64,
    /// Realizing groups whose nilpotency was cross-checked by both algorithms.
    pub realizing_groups_checked: u64,
    pub nonabelian_witnesses_verified: u64,
    pub noncyclic_products_verified: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl StructureSweep {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Forbidden {
    NonAbelian,
    NonCyclic,
}

#[derive(Default)]
struct OrderScan {
    groups_searched: u64,
    nilpotency_cross_checks: u64,
    realizing_groups_checked: u64,
    discrepancies: Vec<Discrepancy>,
}

/// Searches all presentations of one order for realizations of the queried
/// pairs that violate the queried property.
fn scan_order_for_violations(order: u64, queries: &[(u64, u64, Forbidden)]) -> Result<OrderScan> {
    let mut out = OrderScan::default();
    let needs_cyclic = queries.iter().any(|q| q.2 == Forbidden::NonCyclic);
    let prime_power = numtheory::factorize(order)?.prime_power_base().is_some();
    for pres in holder_presentations(order) {
        let abelian = pres.is_abelian();
        if abelian && !needs_cyclic {
            continue;
        }
        let group = FiniteGroup::holder(pres)?;
        let profile = GroupProfile::new(&group);
        let cyclic = profile.is_cyclic();
        let sylow = profile.is_nilpotent_sylow();
        out.nilpotency_cross_checks += 1;
        if sylow != profile.is_nilpotent_coprime() || (prime_power && !sylow) {
            out.discrepancies.push(Discrepancy {
                m: order,
                n: 0,
                reason: format!("nilpotency tests inconsistent on {pres}"),
            });
        }
        let mut searched = false;
        let mut realized = false;
        for &(m, n, forbidden) in queries {
            let violates = match forbidden {
                Forbidden::NonAbelian => !abelian,
                Forbidden::NonCyclic => !cyclic,
            };
            if !violates {
                continue;
            }
            searched = true;
            if let Some(w) = profile.factorizations(m, n, Some(1)).pop() {
                realized = true;
                out.discrepancies.push(Discrepancy {
                    m,
                    n,
                    reason: format!(
                        "{pres} realizes ({m},{n}) with a={} b={} but is {}",
                        w.gen_a,
                        w.gen_b,
                        match forbidden {
                            Forbidden::NonAbelian => "non-abelian",
                            Forbidden::NonCyclic => "non-cyclic",
                        }
                    ),
                });
            }
        }
        if searched {
            out.groups_searched += 1;
        }
        if realized {
            out.realizing_groups_checked += 1;
        }
    }
    Ok(out)
}

/// Abelian and cyclic realizations for all `m, n ≤ x` with
/// `m·n ≤ order_cap`:
///
/// * singular pairs: no non-abelian Hölder group realizes them;
/// * non-singular nilpotent pairs: the non-abelian witness verifies;
/// * cyclic pairs: no non-cyclic Hölder group realizes them;
/// * singular pairs with `gcd(m, n) > 1`: `C_m × C_n = (m, n, 1, 0)` is a
///   non-cyclic realization.
pub fn sweep_structure(x: u64, order_cap: u64) -> Result<StructureSweep> {
    let table = number_table(x)?;
    let mut queries: BTreeMap<u64, Vec<(u64, u64, Forbidden)>> = BTreeMap::new();
    let mut sweep = StructureSweep {
        universe: UNIVERSE,
        x,
        order_cap,
        singular_pairs: 0,
        cyclic_pairs: 0,
        groups_searched: 0,
        nilpotency_cross_checks: 0,
        realizing_groups_checked: 0,
        nonabelian_witnesses_verified: 0,
        noncyclic_products_verified: 0,
        discrepancies: Vec::new(),
    };
    let mut witness_pairs = Vec::new();
    let mut product_pairs = Vec::new();
    for (m, n) in grid(x, order_cap) {
        let (a, b) = (&table[m as usize - 1], &table[n as usize - 1]);
        if singular_pair_with(a, b) {
            sweep.singular_pairs += 1;
            for order in admissible_orders(m, n) {
                queries
                    .entry(order)
                    .or_default()
                    .push((m, n, Forbidden::NonAbelian));
            }
            if cyclic_pair_with(a, b) {
                sweep.cyclic_pairs += 1;
                for order in admissible_orders(m, n) {
                    queries
                        .entry(order)
                        .or_default()
                        .push((m, n, Forbidden::NonCyclic));
                }
            } else {
                product_pairs.push((m, n));
            }
        } else if nilpotent_pair_with(a, b) {
            witness_pairs.push((m, n));
        }
    }

    let batches: Vec<_> = queries.into_iter().collect();
    let scans = batches
        .par_iter()
        .map(|(order, qs)| scan_order_for_violations(*order, qs))
        .collect::<Result<Vec<_>>>()?;
    for s in scans {
        sweep.groups_searched += s.groups_searched;
        sweep.nilpotency_cross_checks += s.nilpotency_cross_checks;
        sweep.realizing_groups_checked += s.realizing_groups_checked;
        sweep.discrepancies.extend(s.discrepancies);
    }

    let witness_results: Vec<std::result::Result<(), Discrepancy>> = witness_pairs
        .par_iter()
        .map(|&(m, n)| {
            build_nonabelian_witness(m, n)
                .map_err(|e| e.to_string())
                .and_then(|w| w.witness.reverify().map_err(|e| e.to_string()))
                .map_err(|reason| Discrepancy { m, n, reason })
        })
        .collect();
    for r in witness_results {
        match r {
            Ok(()) => sweep.nonabelian_witnesses_verified += 1,
            Err(d) => sweep.discrepancies.push(d),
        }
    }

    for (m, n) in product_pairs {
        match noncyclic_product_check(m, n) {
            Ok(()) => sweep.noncyclic_products_verified += 1,
            Err(reason) => sweep.discrepancies.push(Discrepancy { m, n, reason }),
        }
    }
    sweep.discrepancies.sort_by_key(|d| (d.m, d.n));
    Ok(sweep)
}

/// `(m, n, 1, 0)` is an `(m, n)`-bicyclic group via `u`, `v` and is not cyclic.
fn noncyclic_product_check(m: u64, n: u64) -> std::result::Result<(), String> {
    let group = crate::group::make_holder_group(m, n, 1, 0).map_err(|e| e.to_string())?;
    let witness = BicyclicWitness {
        gen_a: crate::group::GroupElement::holder(1 % m, 0),
        gen_b: crate::group::GroupElement::holder(0, 1 % n),
        group,
        m,
        n,
        intersection_size: 1,
        generator_pairs: 0,
    };
    witness.reverify().map_err(|e| e.to_string())?;
    if GroupProfile::new(&witness.group).is_cyclic() {
        return Err(format!("C_{m} x C_{n} tested cyclic"));
    }
    Ok(())
}

/// Exact counts of pairs `m, n ≤ x` satisfying each criterion, and of
/// cyclic numbers `k ≤ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCounts {
    pub x: u64,
    pub nilpotent_pairs: u64,
    pub singular_pairs: u64,
    pub cyclic_pairs: u64,
    pub cyclic_numbers: u64,
}

impl PairCounts {
    pub fn invariants_hold(&self) -> bool {
        self.cyclic_pairs <= self.singular_pairs
            && self.singular_pairs <= self.nilpotent_pairs
            && self.nilpotent_pairs <= self.x * self.x
            && self.cyclic_numbers <= self.x
    }
}

pub fn count_pairs(x: u64) -> Result<PairCounts> {
    count_pairs_table(x, x).map(|rows| *rows.last().expect("x ≥ 1 yields one row"))
}

/// Counts at `x = step, 2·step, …`, always ending with a row for `max`.
///
/// Computed incrementally: going from `x − 1` to `x` adds the `2x − 1`
/// pairs with `max(m, n) = x`.
pub fn count_pairs_table(max: u64, step: u64) -> Result<Vec<PairCounts>> {
    if max == 0 {
        return Err(OracleError::EmptyRange);
    }
    let step = step.max(1);
    let table = number_table(max)?;
    let shells: Vec<[u64; 4]> = (1..=max)
        .into_par_iter()
        .map(|x| {
            let a = &table[x as usize - 1];
            let mut c = [0u64; 4];
            let mut add = |a: &NumberData, b: &NumberData| {
                c[0] += nilpotent_pair_with(a, b) as u64;
                c[1] += singular_pair_with(a, b) as u64;
                c[2] += cyclic_pair_with(a, b) as u64;
            };
            for b in &table[..x as usize - 1] {
                add(a, b);
                add(b, a);
            }
            add(a, a);
            c[3] = (gcd(x, a.phi) == 1) as u64;
            c
        })
        .collect();
    let mut acc = [0u64; 4];
    let mut rows = Vec::new();
    for (k, shell) in shells.iter().enumerate() {
        for i in 0..4 {
            acc[i] += shell[i];
        }
        let x = k as u64 + 1;
        if x % step == 0 || x == max {
            rows.push(PairCounts {
                x,
                nilpotent_pairs: acc[0],
                singular_pairs: acc[1],
                cyclic_pairs: acc[2],
                cyclic_numbers: acc[3],
            });
        }
    }
    Ok(rows)
}

/// `e^γ · x / log log log x`, the asymptotic count of cyclic numbers up to
/// `x`. It is an asymptotic approximation, not a bound.
pub fn erdos_estimate(x: u64) -> Result<f64> {
    if x < 16 {
        return Err(OracleError::EstimateDomain(x));
    }
    let x = x as f64;
    Ok(EULER_GAMMA.exp() * x / x.ln().ln().ln())
}

/// Number of `k ≤ x` classified as cyclic numbers.
pub fn cyclic_numbers_by_class(x: u64) -> Result<u64> {
    let mut count = 0;
    for k in 1..=x {
        if classifier::number_class(k)? == NumberClass::Cyclic {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_enumeration_matches_brute_force() {
        for order in 1..=64u64 {
            let mut brute = Vec::new();
            for m in 1..=order {
                if order % m != 0 {
                    continue;
                }
                let n = order / m;
                for r in 0..m {
                    for s in 0..m {
                        if let Ok(p) = HolderPresentation::new(m, n, r, s) {
                            if p.r == r && p.s == s {
                                brute.push(p);
                            }
                        }
                    }
                }
            }
            assert_eq!(holder_presentations(order), brute, "order {order}");
        }
    }

    #[test]
    fn admissible_order_fixtures() {
        assert_eq!(admissible_orders(5, 25), vec![25, 125]);
        assert_eq!(admissible_orders(2, 3), vec![6]);
        assert_eq!(admissible_orders(1, 1), vec![1]);
    }

    #[test]
    fn verify_fixtures() {
        let r = verify_pair_exhaustive(2, 3).unwrap();
        assert!(!r.predicate && !r.all_nilpotent && r.is_consistent());
        assert!(r.realizations_found > 0);
        assert!(r.counterexamples.iter().any(|c| c.presentation
            == HolderPresentation {
                m: 3,
                n: 2,
                r: 2,
                s: 0
            }));

        let r = verify_pair_exhaustive(5, 25).unwrap();
        assert_eq!(r.orders_scanned, vec![25, 125]);
        assert!(r.predicate && r.all_nilpotent && r.counterexamples.is_empty());
        assert!(r.realizations_found > 0);

        let r = verify_pair_exhaustive(1, 1).unwrap();
        assert_eq!(r.presentations_scanned, 1);
        assert_eq!(r.realizations_found, 1);
        assert!(r.all_nilpotent);

        assert_eq!(
            verify_pair_exhaustive(50, 50).unwrap_err(),
            OracleError::CapExceeded {
                product: 2500,
                cap: 2000
            }
        );
    }

    #[test]
    fn verify_is_symmetric() {
        for (m, n) in [(2, 4), (3, 9), (4, 8), (2, 3), (5, 15), (6, 9)] {
            let a = verify_pair_exhaustive(m, n).unwrap();
            let b = verify_pair_exhaustive(n, m).unwrap();
            assert_eq!(a.realizations_found, b.realizations_found, "({m},{n})");
            assert_eq!(a.realizing_groups, b.realizing_groups, "({m},{n})");
            assert_eq!(a.all_nilpotent, b.all_nilpotent, "({m},{n})");
        }
    }

    #[test]
    fn witness_group_appears_in_scan() {
        for m in 2..=8 {
            for n in 2..=8 {
                if classifier::is_nilpotent_pair(m, n) {
                    continue;
                }
                let w = build_nonnilpotent_witness(m, n).unwrap();
                let pres = w.witness.group.as_holder().unwrap().presentation();
                let r = verify_pair_exhaustive(m, n).unwrap();
                assert!(
                    r.counterexamples.iter().any(|c| c.presentation == pres),
                    "({m},{n}): {pres} missing"
                );
            }
        }
    }

    #[test]
    fn case_analysis_sweep_fixtures() {
        let s = sweep_case_analysis(1).unwrap();
        assert!(s.passed());
        assert_eq!(s.satisfying_pairs, 1);
        let s = sweep_case_analysis(5).unwrap();
        assert!(s.passed());
        assert_eq!(s.satisfying_pairs, 17);
        assert_eq!(s.pairs_checked, 25);
        assert_eq!(s.odd_cross + s.both_even + s.mixed_parity, 8);
    }

    #[test]
    fn nilpotency_sweep_small() {
        let s = sweep_nilpotency(2, 10);
        assert!(s.passed());
        assert_eq!(s.pairs_checked, 4);
        assert_eq!(s.nilpotent_pairs_verified, 4);
        let s = sweep_nilpotency(8, 64);
        assert!(s.passed(), "{:?}", s.discrepancies);
        assert!(s.failing_pairs_witnessed > 0);
    }

    #[test]
    fn structure_sweep_small() {
        let s = sweep_structure(30, 120).unwrap();
        assert!(s.passed(), "{:?}", s.discrepancies);
        assert!(s.nonabelian_witnesses_verified > 0);
        assert!(s.noncyclic_products_verified > 0);
    }

    #[test]
    fn count_fixtures() {
        let c = count_pairs(1).unwrap();
        assert_eq!(
            c,
            PairCounts {
                x: 1,
                nilpotent_pairs: 1,
                singular_pairs: 1,
                cyclic_pairs: 1,
                cyclic_numbers: 1
            }
        );
        let c = count_pairs(5).unwrap();
        assert_eq!(
            (c.nilpotent_pairs, c.singular_pairs, c.cyclic_pairs),
            (17, 14, 11)
        );
        assert_eq!(count_pairs(30).unwrap().cyclic_numbers, 12);
        assert_eq!(cyclic_numbers_by_class(30).unwrap(), 12);
        let rows = count_pairs_table(10, 4).unwrap();
        assert_eq!(rows.iter().map(|r| r.x).collect::<Vec<_>>(), vec![4, 8, 10]);
    }

    #[test]
    fn erdos_domain() {
        assert_eq!(erdos_estimate(15), Err(OracleError::EstimateDomain(15)));
        let v = erdos_estimate(16).unwrap();
        let expected = EULER_GAMMA.exp() * 16.0 / 16f64.ln().ln().ln();
        assert_eq!(v, expected);
    }
}
