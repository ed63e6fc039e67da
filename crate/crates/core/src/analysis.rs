//! Structural tests on concrete groups: abelian, nilpotent (two independent
//! algorithms), cyclic, element-order histograms, and the search for
//! factorizations `G = ⟨a⟩⟨b⟩` with `|a| = m`, `|b| = n`.
//!
//! Most checks need every element order; [`GroupProfile`] computes them once
//! and answers all queries from the cached table.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::group::{ElementIndex, FiniteGroup, GroupElement, GroupError};
use crate::numtheory::{euler_phi, gcd};

/// Number of elements of each order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct OrderHistogram(BTreeMap<u64, u64>);

impl OrderHistogram {
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn max_order(&self) -> u64 {
        self.0.keys().copied().max().unwrap_or(1)
    }

    /// Elements whose order is a power of `p` (the identity included).
    pub fn p_power_count(&self, p: u64) -> u64 {
        self.0
            .iter()
            .filter(|(&ord, _)| is_power_of(ord, p))
            .map(|(_, &c)| c)
            .sum()
    }
}

impl From<BTreeMap<u64, u64>> for OrderHistogram {
    fn from(m: BTreeMap<u64, u64>) -> Self {
        OrderHistogram(m)
    }
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// A group with designated generators realizing an `(m, n)`-bicyclic
/// factorization `G = ⟨gen_a⟩⟨gen_b⟩`.
#[derive(Debug, Clone, Serialize)]
pub struct BicyclicWitness {
    pub group: FiniteGroup,
    pub gen_a: GroupElement,
    pub gen_b: GroupElement,
    pub m: u64,
    pub n: u64,
    /// `|⟨a⟩ ∩ ⟨b⟩| = m·n / |G|`
    pub intersection_size: u64,
    /// Generator choices `(a, b)` realizing the same pair of subgroups: `φ(m)·φ(n)`.
    pub generator_pairs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generator {which} has order {actual}, expected {expected}")]
    WrongOrder {
        which: &'static str,
        actual: u64,
        expected: u64,
    },
    #[error("|<a><b>| = {product} but |G| = {order}")]
    NotAFactorization { product: u64, order: u64 },
    #[error("intersection has {actual} elements, recorded {recorded}")]
    IntersectionMismatch { actual: u64, recorded: u64 },
}

impl BicyclicWitness {
    /// Checks every invariant from scratch using only element-level
    /// multiplication: generator orders by repeated multiplication, the
    /// product set `⟨a⟩⟨b⟩` as an explicit set, and the intersection.
    pub fn reverify(&self) -> Result<(), WitnessError> {
        let g = &self.group;
        let id = g.identity();
        let powers = |x: &GroupElement| -> Result<Vec<GroupElement>, GroupError> {
            let mut out = vec![id.clone()];
            let mut cur = x.clone();
            while cur != id {
                out.push(cur.clone());
                cur = g.multiply(&cur, x)?;
            }
            Ok(out)
        };
        let a_pows = powers(&self.gen_a)?;
        let b_pows = powers(&self.gen_b)?;
        for (which, pows, expected) in [("a", &a_pows, self.m), ("b", &b_pows, self.n)] {
            if pows.len() as u64 != expected {
                return Err(WitnessError::WrongOrder {
                    which,
                    actual: pows.len() as u64,
                    expected,
                });
            }
        }
        let mut product = BTreeSet::new();
        for x in &a_pows {
            for y in &b_pows {
                product.insert(g.multiply(x, y)?);
            }
        }
        let order = g.order() as u64;
        if product.len() as u64 != order {
            return Err(WitnessError::NotAFactorization {
                product: product.len() as u64,
                order,
            });
        }
        let a_set: BTreeSet<_> = a_pows.iter().collect();
        let inter = b_pows.iter().filter(|y| a_set.contains(y)).count() as u64;
        if inter != self.intersection_size || inter * order != self.m * self.n {
            return Err(WitnessError::IntersectionMismatch {
                actual: inter,
                recorded: self.intersection_size,
            });
        }
        Ok(())
    }
}

/// A cyclic subgroup found during the factorization search.
#[derive(Debug, Clone)]
struct CyclicSubgroup {
    generator: ElementIndex,
    members: Vec<ElementIndex>,
}

/// Cached element orders of one group.
#[derive(Debug, Clone)]
pub struct GroupProfile<'g> {
    group: &'g FiniteGroup,
    primes: Vec<u64>,
    orders: Vec<u64>,
}

impl<'g> GroupProfile<'g> {
    /// Orders are found by walking `⟨x⟩` for each element not yet reached and
    /// assigning `|x^k| = |x| / gcd(k, |x|)` to every power along the way.
    pub fn new(group: &'g FiniteGroup) -> Self {
        let primes = group.order_primes();
        let size = group.order();
        let mut orders = vec![0u64; size];
        orders[group.identity_index()] = 1;
        let mut powers = Vec::new();
        for x in 0..size {
            if orders[x] != 0 {
                continue;
            }
            powers.clear();
            let mut y = x;
            while y != group.identity_index() {
                powers.push(y);
                y = group.mul_index(y, x);
            }
            let ord = powers.len() as u64 + 1;
            for (k, &p) in powers.iter().enumerate() {
                orders[p] = ord / gcd(k as u64 + 1, ord);
            }
        }
        GroupProfile {
            group,
            primes,
            orders,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Element orders indexed by [`ElementIndex`].
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn histogram(&self) -> OrderHistogram {
        let mut h = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_insert(0) += 1;
        }
        OrderHistogram(h)
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian(self.group)
    }

    pub fn is_cyclic(&self) -> bool {
        let order = self.group.order() as u64;
        self.orders.contains(&order)
    }

    /// Every pair of elements with coprime orders commutes.
    pub fn is_nilpotent_coprime(&self) -> bool {
        let g = self.group;
        let mut classes: BTreeMap<u64, Vec<ElementIndex>> = BTreeMap::new();
        for (x, &o) in self.orders.iter().enumerate() {
            if o > 1 {
                classes.entry(o).or_default().push(x);
            }
        }
        let classes: Vec<(u64, Vec<ElementIndex>)> = classes.into_iter().collect();
        for (k, (o1, xs)) in classes.iter().enumerate() {
            for (o2, ys) in &classes[k + 1..] {
                if gcd(*o1, *o2) != 1 {
                    continue;
                }
                for &x in xs {
                    for &y in ys {
                        if g.mul_index(x, y) != g.mul_index(y, x) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// For each prime `p | |G|`, the elements of `p`-power order number
    /// exactly the `p`-part of `|G|` (equivalently, the Sylow `p`-subgroup
    /// is unique).
    pub fn is_nilpotent_sylow(&self) -> bool {
        let order = self.group.order() as u64;
        let hist = self.histogram();
        self.primes.iter().all(|&p| {
            let mut p_part = 1;
            while order % (p_part * p) == 0 {
                p_part *= p;
            }
            hist.p_power_count(p) == p_part
        })
    }

    fn cyclic_subgroups_of_order(&self, k: u64) -> Vec<CyclicSubgroup> {
        let g = self.group;
        let mut covered = vec![false; self.orders.len()];
        let mut out = Vec::new();
        for x in 0..self.orders.len() {
            if self.orders[x] != k || covered[x] {
                continue;
            }
            let members = g.cyclic_subgroup_indices(x);
            for (j, &y) in members.iter().enumerate() {
                if gcd(j as u64, k) == 1 {
                    covered[y] = true;
                }
            }
            out.push(CyclicSubgroup {
                generator: x,
                members,
            });
        }
        out
    }

    /// All ordered pairs of cyclic subgroups `(X, Y)`, `|X| = m`, `|Y| = n`,
    /// with `XY = G`, reported through their least generators. Stops after
    /// `limit` witnesses when one is given.
    pub fn factorizations(&self, m: u64, n: u64, limit: Option<usize>) -> Vec<BicyclicWitness> {
        let g = self.group;
        let order = g.order() as u64;
        if m == 0 || n == 0 || order % m != 0 || order % n != 0 || (m * n) % order != 0 {
            return Vec::new();
        }
        let intersection_size = m * n / order;
        let xs = self.cyclic_subgroups_of_order(m);
        if xs.is_empty() {
            return Vec::new();
        }
        let ys = if m == n {
            xs.clone()
        } else {
            self.cyclic_subgroups_of_order(n)
        };
        let generator_pairs = euler_phi(m).unwrap_or(0) * euler_phi(n).unwrap_or(0);

        let mut stamp = vec![0u32; g.order()];
        let mut product_stamp = vec![0u32; g.order()];
        let mut product_gen = 0u32;
        let mut out = Vec::new();
        for (xi, x) in xs.iter().enumerate() {
            let tag = xi as u32 + 1;
            for &e in &x.members {
                stamp[e] = tag;
            }
            for y in &ys {
                let inter = y.members.iter().filter(|&&e| stamp[e] == tag).count() as u64;
                if inter != intersection_size {
                    continue;
                }
                product_gen += 1;
                let mut distinct = 0u64;
                for &a in &x.members {
                    for &b in &y.members {
                        let p = g.mul_index(a, b);
                        if product_stamp[p] != product_gen {
                            product_stamp[p] = product_gen;
                            distinct += 1;
                        }
                    }
                }
                if distinct != order {
                    continue;
                }
                out.push(BicyclicWitness {
                    group: g.clone(),
                    gen_a: g.element_at(x.generator),
                    gen_b: g.element_at(y.generator),
                    m,
                    n,
                    intersection_size,
                    generator_pairs,
                });
                if limit.is_some_and(|l| out.len() >= l) {
                    return out;
                }
            }
        }
        out
    }
}

/// Whether all elements commute. Hölder groups are generated by `u` and `v`,
/// so it suffices that those two commute.
pub fn is_abelian(group: &FiniteGroup) -> bool {
    match group {
        FiniteGroup::Holder(h) => h.presentation().is_abelian(),
        FiniteGroup::Product(p) => is_abelian(p.left()) && is_abelian(p.right()),
    }
}

/// Exhaustive all-pairs commutation check, used to cross-check [`is_abelian`].
pub fn is_abelian_bruteforce(group: &FiniteGroup) -> bool {
    let n = group.order();
    (0..n).all(|x| (x + 1..n).all(|y| group.mul_index(x, y) == group.mul_index(y, x)))
}

pub fn is_nilpotent_coprime(group: &FiniteGroup) -> bool {
    GroupProfile::new(group).is_nilpotent_coprime()
}

pub fn is_nilpotent_sylow(group: &FiniteGroup) -> bool {
    GroupProfile::new(group).is_nilpotent_sylow()
}

pub fn is_cyclic(group: &FiniteGroup) -> bool {
    GroupProfile::new(group).is_cyclic()
}

pub fn order_histogram(group: &FiniteGroup) -> OrderHistogram {
    GroupProfile::new(group).histogram()
}

pub fn find_bicyclic_factorizations(group: &FiniteGroup, m: u64, n: u64) -> Vec<BicyclicWitness> {
    GroupProfile::new(group).factorizations(m, n, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, make_holder_group};

    fn g(m: u64, n: u64, r: u64, s: u64) -> FiniteGroup {
        make_holder_group(m, n, r, s).unwrap()
    }

    fn hist(pairs: &[(u64, u64)]) -> OrderHistogram {
        OrderHistogram(pairs.iter().copied().collect())
    }

    #[test]
    fn abelian_fixtures() {
        assert!(is_abelian(&g(3, 2, 1, 0)));
        assert!(!is_abelian(&g(3, 2, 2, 0)));
        assert!(!is_abelian(&g(4, 2, 3, 2)));
        let p = direct_product(g(3, 2, 2, 0), g(5, 1, 1, 0)).unwrap();
        assert!(!is_abelian(&p));
        assert!(!is_abelian_bruteforce(&p));
    }

    #[test]
    fn nilpotency_fixtures() {
        let q8 = g(4, 2, 3, 2);
        assert!(is_nilpotent_coprime(&q8) && is_nilpotent_sylow(&q8));
        let s3 = g(3, 2, 2, 0);
        assert!(!is_nilpotent_coprime(&s3) && !is_nilpotent_sylow(&s3));
        let g21 = g(7, 3, 2, 0);
        assert!(!is_nilpotent_coprime(&g21) && !is_nilpotent_sylow(&g21));
        let c6 = g(3, 2, 1, 0);
        assert!(is_nilpotent_coprime(&c6) && is_nilpotent_sylow(&c6));
        let g27 = g(9, 3, 4, 0);
        assert!(is_nilpotent_coprime(&g27) && is_nilpotent_sylow(&g27));
    }

    #[test]
    fn cyclic_fixtures() {
        assert!(is_cyclic(&g(3, 2, 1, 0)));
        assert!(!is_cyclic(&g(2, 2, 1, 0)));
        assert!(!is_cyclic(&g(3, 2, 2, 0)));
    }

    #[test]
    fn histogram_fixtures() {
        assert_eq!(order_histogram(&g(2, 1, 1, 0)), hist(&[(1, 1), (2, 1)]));
        assert_eq!(
            order_histogram(&g(3, 2, 2, 0)),
            hist(&[(1, 1), (2, 3), (3, 2)])
        );
        assert_eq!(
            order_histogram(&g(4, 2, 3, 2)),
            hist(&[(1, 1), (2, 1), (4, 6)])
        );
    }

    #[test]
    fn factorization_fixtures() {
        let s3 = g(3, 2, 2, 0);
        let ws = find_bicyclic_factorizations(&s3, 2, 3);
        assert_eq!(ws.len(), 3);
        let bs: BTreeSet<_> = ws.iter().map(|w| w.gen_b.clone()).collect();
        assert_eq!(bs.len(), 1);
        for w in &ws {
            w.reverify().unwrap();
            assert_eq!(w.intersection_size, 1);
        }

        let c6 = g(3, 2, 1, 0);
        let ws = find_bicyclic_factorizations(&c6, 6, 1);
        assert_eq!(ws.len(), 1);
        ws[0].reverify().unwrap();

        let q8 = g(4, 2, 3, 2);
        let ws = find_bicyclic_factorizations(&q8, 4, 4);
        assert!(!ws.is_empty());
        for w in &ws {
            assert_eq!(w.intersection_size, 2);
            w.reverify().unwrap();
        }
        assert!(find_bicyclic_factorizations(&q8, 8, 1).is_empty());
        assert!(find_bicyclic_factorizations(&s3, 6, 1).is_empty());
        assert!(find_bicyclic_factorizations(&s3, 5, 1).is_empty());
    }

    #[test]
    fn reverify_rejects_tampering() {
        let s3 = g(3, 2, 2, 0);
        let mut w = find_bicyclic_factorizations(&s3, 2, 3).remove(0);
        w.intersection_size = 2;
        assert!(matches!(
            w.reverify(),
            Err(WitnessError::IntersectionMismatch { .. })
        ));
        let mut w = find_bicyclic_factorizations(&s3, 2, 3).remove(0);
        w.gen_b = GroupElement::holder(0, 1);
        w.n = 2;
        assert!(w.reverify().is_err());
    }

    #[test]
    fn histogram_total_and_identity() {
        for (m, n, r, s) in [(3, 2, 2, 0), (4, 2, 3, 2), (9, 3, 4, 0), (6, 4, 5, 0)] {
            let grp = g(m, n, r, s);
            let h = order_histogram(&grp);
            assert_eq!(h.total(), grp.order() as u64);
            assert_eq!(h.counts()[&1], 1);
        }
    }
}
