//! Arithmetic criteria on pairs `(m, n)` and the explicit groups that show
//! the criteria are sharp.
//!
//! * [`is_nilpotent_pair`]: `gcd(n, φ(rad m)) = gcd(m, φ(rad n)) = 1`, exactly
//!   the pairs for which every `(m, n)`-bicyclic group is nilpotent.
//! * [`is_singular_pair`]: `gcd(m, φ(n)) = gcd(n, φ(m)) = 1` (every such
//!   group is abelian).
//! * [`is_cyclic_pair`]: singular and `gcd(m, n) = 1` (every such group is
//!   cyclic).
//!
//! [`classify_pair`] derives a parity/prime case analysis independently of
//! the gcd test so that the two can be checked against each other. When a
//! pair fails, [`build_nonnilpotent_witness`] produces a metacyclic group
//! with two non-commuting elements of coprime order.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::analysis::{BicyclicWitness, GroupProfile, WitnessError};
use crate::group::{direct_product, FiniteGroup, GroupElement, GroupError, HolderPresentation};
use crate::numtheory::{self, crt_combine, find_unit, gcd, NumError, PrimeFactorization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("m and n must be positive integers")]
    ZeroInput,
    #[error("pair satisfies condition (1): every ({m},{n})-bicyclic group is nilpotent")]
    SatisfiesCondition { m: u64, n: u64 },
    #[error("pair ({m}, {n}) is singular: every ({m},{n})-bicyclic group is abelian")]
    Singular { m: u64, n: u64 },
    #[error("pair ({m}, {n}) fails condition (1); use the non-nilpotent witness instead")]
    NotNilpotentPair { m: u64, n: u64 },
    #[error("pair ({m}, {n}) has a unit member")]
    UnitMember { m: u64, n: u64 },
    #[error("constructed group failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

pub type Result<T> = std::result::Result<T, ClassifierError>;

/// Per-number data reused by all pair predicates.
#[derive(Debug, Clone)]
pub struct NumberData {
    pub value: u64,
    pub factorization: PrimeFactorization,
    pub phi: u64,
    pub phi_rad: u64,
}

impl NumberData {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(ClassifierError::ZeroInput);
        }
        let factorization = numtheory::factorize(n)?;
        let phi = factorization.euler_phi();
        let phi_rad = factorization.primes().map(|p| p - 1).product();
        Ok(NumberData {
            value: n,
            factorization,
            phi,
            phi_rad,
        })
    }

    fn odd_part(&self) -> u64 {
        self.value >> self.value.trailing_zeros()
    }
}

fn data(n: u64) -> NumberData {
    NumberData::new(n).expect("pair members must be positive")
}

pub fn nilpotent_pair_with(a: &NumberData, b: &NumberData) -> bool {
    gcd(b.value, a.phi_rad) == 1 && gcd(a.value, b.phi_rad) == 1
}

pub fn singular_pair_with(a: &NumberData, b: &NumberData) -> bool {
    gcd(a.value, b.phi) == 1 && gcd(b.value, a.phi) == 1
}

pub fn cyclic_pair_with(a: &NumberData, b: &NumberData) -> bool {
    gcd(a.value, b.value) == 1 && singular_pair_with(a, b)
}

/// `gcd(n, φ(rad m)) = gcd(m, φ(rad n)) = 1`.
///
/// # Panics
/// If `m` or `n` is zero.
pub fn is_nilpotent_pair(m: u64, n: u64) -> bool {
    nilpotent_pair_with(&data(m), &data(n))
}

/// `gcd(m, φ(n)) = gcd(n, φ(m)) = 1`. Panics on zero.
pub fn is_singular_pair(m: u64, n: u64) -> bool {
    singular_pair_with(&data(m), &data(n))
}

/// `gcd(m, n) = gcd(m, φ(n)) = gcd(n, φ(m)) = 1`. Panics on zero.
pub fn is_cyclic_pair(m: u64, n: u64) -> bool {
    cyclic_pair_with(&data(m), &data(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SuccessCase {
    /// `m = 1` or `n = 1`
    Unit,
    /// `m = p^e`, `n = p^f`
    PrimePowers { p: u64 },
    /// both odd, no primes `p | m`, `q | n` with `p | q − 1` or `q | p − 1`
    OddCompatible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrossDirection {
    #[serde(rename = "p|q-1")]
    PDividesQMinusOne,
    #[serde(rename = "q|p-1")]
    QDividesPMinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityOrientation {
    /// `m` even, `n > 1` odd
    MEvenNOdd,
    /// `n` even, `m > 1` odd
    NEvenMOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureCase {
    OddCross {
        p: u64,
        q: u64,
        direction: CrossDirection,
    },
    BothEven {
        m_odd: u64,
        n_odd: u64,
    },
    MixedParity {
        orientation: ParityOrientation,
    },
}

impl FailureCase {
    /// Recomputes the arithmetic facts this case asserts about `(m, n)`.
    pub fn holds_for(&self, m: u64, n: u64) -> bool {
        match *self {
            FailureCase::OddCross { p, q, direction } => {
                let divides = match direction {
                    CrossDirection::PDividesQMinusOne => (q - 1) % p == 0,
                    CrossDirection::QDividesPMinusOne => (p - 1) % q == 0,
                };
                m % 2 == 1
                    && n % 2 == 1
                    && p != q
                    && numtheory::is_prime(p)
                    && numtheory::is_prime(q)
                    && m % p == 0
                    && n % q == 0
                    && divides
            }
            FailureCase::BothEven { m_odd, n_odd } => {
                m % 2 == 0
                    && n % 2 == 0
                    && m_odd == m >> m.trailing_zeros()
                    && n_odd == n >> n.trailing_zeros()
                    && (m_odd > 1 || n_odd > 1)
            }
            FailureCase::MixedParity { orientation } => match orientation {
                ParityOrientation::MEvenNOdd => m % 2 == 0 && n % 2 == 1 && n > 1,
                ParityOrientation::NEvenMOdd => n % 2 == 0 && m % 2 == 1 && m > 1,
            },
        }
    }
}

impl fmt::Display for FailureCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureCase::OddCross { p, q, direction } => {
                let d = match direction {
                    CrossDirection::PDividesQMinusOne => "p|q-1",
                    CrossDirection::QDividesPMinusOne => "q|p-1",
                };
                write!(f, "ODD_CROSS p={p} q={q} {d}")
            }
            FailureCase::BothEven { m_odd, n_odd } => {
                write!(f, "BOTH_EVEN m_odd={m_odd} n_odd={n_odd}")
            }
            FailureCase::MixedParity { orientation } => match orientation {
                ParityOrientation::MEvenNOdd => write!(f, "MIXED_PARITY m even, n>1 odd"),
                ParityOrientation::NEvenMOdd => write!(f, "MIXED_PARITY n even, m>1 odd"),
            },
        }
    }
}

impl fmt::Display for SuccessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuccessCase::Unit => write!(f, "UNIT"),
            SuccessCase::PrimePowers { p } => write!(f, "PRIME_POWERS p={p}"),
            SuccessCase::OddCompatible => write!(f, "ODD_COMPATIBLE"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Success(SuccessCase),
    Failure(FailureCase),
}

/// Case analysis of a pair. `verdict` comes from parity and prime
/// divisibility alone; `satisfies_mcond` from the gcd test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClassification {
    pub m: u64,
    pub n: u64,
    pub satisfies_mcond: bool,
    pub verdict: Verdict,
}

impl PairClassification {
    pub fn success_case(&self) -> Option<SuccessCase> {
        match self.verdict {
            Verdict::Success(s) => Some(s),
            Verdict::Failure(_) => None,
        }
    }

    pub fn failure_case(&self) -> Option<FailureCase> {
        match self.verdict {
            Verdict::Failure(f) => Some(f),
            Verdict::Success(_) => None,
        }
    }

    /// The case analysis agrees with the gcd test and any failure case
    /// re-verifies.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::Success(_) => self.satisfies_mcond,
            Verdict::Failure(f) => !self.satisfies_mcond && f.holds_for(self.m, self.n),
        }
    }
}

impl Serialize for PairClassification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View {
            m: u64,
            n: u64,
            satisfies_mcond: bool,
            success_case: Option<SuccessCase>,
            failure_case: Option<FailureCase>,
        }
        View {
            m: self.m,
            n: self.n,
            satisfies_mcond: self.satisfies_mcond,
            success_case: self.success_case(),
            failure_case: self.failure_case(),
        }
        .serialize(serializer)
    }
}

/// The parity/prime failure conditions, checked without reference to the
/// gcd test. Ties go to the smallest `p | m`, then the smallest `q | n`,
/// with `p | q − 1` tried before `q | p − 1`.
fn failure_case(a: &NumberData, b: &NumberData) -> Option<FailureCase> {
    let (m, n) = (a.value, b.value);
    match (m % 2 == 0, n % 2 == 0) {
        (false, false) => {
            for p in a.factorization.primes() {
                for q in b.factorization.primes() {
                    if p == q {
                        continue;
                    }
                    if (q - 1) % p == 0 {
                        let direction = CrossDirection::PDividesQMinusOne;
                        return Some(FailureCase::OddCross { p, q, direction });
                    }
                    if (p - 1) % q == 0 {
                        let direction = CrossDirection::QDividesPMinusOne;
                        return Some(FailureCase::OddCross { p, q, direction });
                    }
                }
            }
            None
        }
        (true, true) => {
            let (m_odd, n_odd) = (a.odd_part(), b.odd_part());
            (m_odd > 1 || n_odd > 1).then_some(FailureCase::BothEven { m_odd, n_odd })
        }
        (true, false) => (n > 1).then_some(FailureCase::MixedParity {
            orientation: ParityOrientation::MEvenNOdd,
        }),
        (false, true) => (m > 1).then_some(FailureCase::MixedParity {
            orientation: ParityOrientation::NEvenMOdd,
        }),
    }
}

/// Success cases in priority order `UNIT`, `PRIME_POWERS`, `ODD_COMPATIBLE`.
/// Only meaningful when no failure case applies.
fn success_case(a: &NumberData, b: &NumberData) -> SuccessCase {
    if a.value == 1 || b.value == 1 {
        return SuccessCase::Unit;
    }
    match (
        a.factorization.prime_power_base(),
        b.factorization.prime_power_base(),
    ) {
        (Some(p), Some(q)) if p == q => SuccessCase::PrimePowers { p },
        _ => SuccessCase::OddCompatible,
    }
}

pub fn classify_pair_with(a: &NumberData, b: &NumberData) -> PairClassification {
    let verdict = match failure_case(a, b) {
        Some(f) => Verdict::Failure(f),
        None => Verdict::Success(success_case(a, b)),
    };
    PairClassification {
        m: a.value,
        n: b.value,
        satisfies_mcond: nilpotent_pair_with(a, b),
        verdict,
    }
}

pub fn classify_pair(m: u64, n: u64) -> Result<PairClassification> {
    Ok(classify_pair_with(
        &NumberData::new(m)?,
        &NumberData::new(n)?,
    ))
}

/// Two elements demonstrating a failure of commutativity.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub x: GroupElement,
    pub y: GroupElement,
    pub order_x: u64,
    pub order_y: u64,
    pub commutator: GroupElement,
}

impl Certificate {
    fn new(group: &FiniteGroup, x: GroupElement, y: GroupElement) -> Result<Self> {
        Ok(Certificate {
            order_x: group.element_order(&x)?,
            order_y: group.element_order(&y)?,
            commutator: group.commutator(&x, &y)?,
            x,
            y,
        })
    }

    pub fn is_nontrivial(&self, group: &FiniteGroup) -> bool {
        self.commutator != group.identity()
    }
}

/// What a constructed witness demonstrates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum WitnessKind {
    NonNilpotent { case: FailureCase },
    NonAbelian { p: u64 },
}

/// A witness together with the certificate that it has the claimed
/// defect.
#[derive(Debug, Clone, Serialize)]
pub struct CertifiedWitness {
    pub kind: WitnessKind,
    pub witness: BicyclicWitness,
    pub certificate: Certificate,
}

fn p_adic_split(n: u64, p: u64) -> (u64, u64) {
    let mut pe = 1;
    while n % (pe * p) == 0 {
        pe *= p;
    }
    (pe, n / pe)
}

/// A split metacyclic group `C_normal ⋊ C_acting` with `v⁻¹uv = u^r`,
/// with the pair's `a`, `b` mapped onto `u`, `v` as requested.
fn split_metacyclic(
    m: u64,
    n: u64,
    r: u64,
    a_is_normal: bool,
) -> Result<(FiniteGroup, GroupElement, GroupElement)> {
    let (normal, acting) = if a_is_normal { (m, n) } else { (n, m) };
    let group = FiniteGroup::holder(HolderPresentation::new(normal, acting, r, 0)?)?;
    let u = GroupElement::holder(1 % normal, 0);
    let v = GroupElement::holder(0, 1 % acting);
    Ok(if a_is_normal {
        (group, u, v)
    } else {
        (group, v, u)
    })
}

fn unit_or_bug(modulus: u64, exponent: u64) -> Result<u64> {
    find_unit(modulus, exponent, modulus)?.ok_or_else(|| {
        ClassifierError::Verification(format!(
            "no nontrivial unit of order dividing {exponent} modulo {modulus}"
        ))
    })
}

/// Builds a non-nilpotent `(m, n)`-bicyclic group for a pair failing the
/// nilpotency criterion, following the case returned by [`classify_pair`].
///
/// The returned group is split metacyclic with trivial intersection, the
/// generators are reported in the caller's `(m, n)` order, and the
/// certificate holds two elements of coprime order that do not commute.
pub fn build_nonnilpotent_witness(m: u64, n: u64) -> Result<CertifiedWitness> {
    let class = classify_pair(m, n)?;
    if class.satisfies_mcond {
        return Err(ClassifierError::SatisfiesCondition { m, n });
    }
    if m == 1 || n == 1 {
        return Err(ClassifierError::UnitMember { m, n });
    }
    let case = class.failure_case().ok_or_else(|| {
        ClassifierError::Verification(format!("({m}, {n}) fails (1) but no failure case applies"))
    })?;

    // (r, a_is_normal, exponent for a1 = a^k, exponent for b1 = b^l)
    let (r, a_is_normal, ka, kb) = match case {
        FailureCase::OddCross { p, q, direction } => {
            let (pe, m1) = p_adic_split(m, p);
            let (qf, n1) = p_adic_split(n, q);
            match direction {
                CrossDirection::PDividesQMinusOne => {
                    let r0 = unit_or_bug(qf, p)?;
                    (crt_combine(&[(1, n1), (r0, qf)])?, false, m1, n1)
                }
                CrossDirection::QDividesPMinusOne => {
                    let r0 = unit_or_bug(pe, q)?;
                    (crt_combine(&[(1, m1), (r0, pe)])?, true, m1, n1)
                }
            }
        }
        FailureCase::BothEven { m_odd, n_odd } => {
            let (two_e, _) = p_adic_split(m, 2);
            let (two_f, _) = p_adic_split(n, 2);
            if m_odd > 1 {
                let r0 = unit_or_bug(m_odd, 2)?;
                (crt_combine(&[(1, two_e), (r0, m_odd)])?, true, two_e, n_odd)
            } else {
                let r0 = unit_or_bug(n_odd, 2)?;
                (
                    crt_combine(&[(1, two_f), (r0, n_odd)])?,
                    false,
                    m_odd,
                    two_f,
                )
            }
        }
        FailureCase::MixedParity { orientation } => match orientation {
            ParityOrientation::MEvenNOdd => {
                let (_, m1) = p_adic_split(m, 2);
                (unit_or_bug(n, 2)?, false, m1, 1)
            }
            ParityOrientation::NEvenMOdd => {
                let (_, n1) = p_adic_split(n, 2);
                (unit_or_bug(m, 2)?, true, 1, n1)
            }
        },
    };

    let (group, gen_a, gen_b) = split_metacyclic(m, n, r, a_is_normal)?;
    let a1 = group.power(&gen_a, ka as i64)?;
    let b1 = group.power(&gen_b, kb as i64)?;
    let certificate = Certificate::new(&group, a1, b1)?;
    if gcd(certificate.order_x, certificate.order_y) != 1 || !certificate.is_nontrivial(&group) {
        return Err(ClassifierError::Verification(format!(
            "certificate for ({m}, {n}) does not exhibit coprime non-commuting elements"
        )));
    }
    let witness = BicyclicWitness {
        group,
        gen_a,
        gen_b,
        m,
        n,
        intersection_size: 1,
        generator_pairs: numtheory::euler_phi(m)? * numtheory::euler_phi(n)?,
    };
    witness.reverify()?;
    let profile = GroupProfile::new(&witness.group);
    if profile.is_nilpotent_sylow() || profile.is_nilpotent_coprime() {
        return Err(ClassifierError::Verification(format!(
            "witness for ({m}, {n}) tested nilpotent"
        )));
    }
    Ok(CertifiedWitness {
        kind: WitnessKind::NonNilpotent { case },
        witness,
        certificate,
    })
}

/// The shared prime used for the non-abelian construction: the smallest
/// `p` dividing both members with `p²` dividing at least one of them.
fn nonabelian_prime(a: &NumberData, b: &NumberData) -> Option<u64> {
    a.factorization.primes().find(|&p| {
        let (e_m, e_n) = (a.factorization.valuation(p), b.factorization.valuation(p));
        e_n >= 1 && (e_m >= 2 || e_n >= 2)
    })
}

/// Builds a non-abelian nilpotent `(m, n)`-bicyclic group for a pair that
/// satisfies the nilpotency criterion but is not singular.
///
/// The group is `P × A`, where `P` is the metacyclic `p`-group
/// `(p^e, p^f, 1 + p^{e−1}, 0)` on the side with the larger `p`-adic
/// valuation (ties go to `n`) and `A = (m/p^·, n/p^·, 1, 0)` is abelian.
/// When `A` is trivial only `P` is returned.
pub fn build_nonabelian_witness(m: u64, n: u64) -> Result<CertifiedWitness> {
    let (a, b) = (NumberData::new(m)?, NumberData::new(n)?);
    if !nilpotent_pair_with(&a, &b) {
        return Err(ClassifierError::NotNilpotentPair { m, n });
    }
    if singular_pair_with(&a, &b) {
        return Err(ClassifierError::Singular { m, n });
    }
    if m == 1 || n == 1 {
        return Err(ClassifierError::UnitMember { m, n });
    }
    let p = nonabelian_prime(&a, &b).ok_or_else(|| {
        ClassifierError::Verification(format!("no squared shared prime for ({m}, {n})"))
    })?;
    let (pm, m_rest) = p_adic_split(m, p);
    let (pn, n_rest) = p_adic_split(n, p);
    let a_is_normal = pm > pn;
    let (normal, acting) = if a_is_normal { (pm, pn) } else { (pn, pm) };
    let r = 1 + normal / p;
    let (p_block, pa, pb) = split_metacyclic(pm, pn, r, a_is_normal)?;
    debug_assert_eq!(
        p_block.as_holder().map(|h| h.presentation()),
        HolderPresentation::new(normal, acting, r % normal, 0).ok()
    );

    let (group, gen_a, gen_b) = if m_rest == 1 && n_rest == 1 {
        (p_block, pa, pb)
    } else {
        let abelian = FiniteGroup::holder(HolderPresentation::new(m_rest, n_rest, 1, 0)?)?;
        let qa = GroupElement::holder(1 % m_rest, 0);
        let qb = GroupElement::holder(0, 1 % n_rest);
        (
            direct_product(p_block, abelian)?,
            GroupElement::pair(pa, qa),
            GroupElement::pair(pb, qb),
        )
    };
    let certificate = Certificate::new(&group, gen_a.clone(), gen_b.clone())?;
    if !certificate.is_nontrivial(&group) {
        return Err(ClassifierError::Verification(format!(
            "generators of the ({m}, {n}) witness commute"
        )));
    }
    let witness = BicyclicWitness {
        group,
        gen_a,
        gen_b,
        m,
        n,
        intersection_size: 1,
        generator_pairs: a.phi * b.phi,
    };
    witness.reverify()?;
    let profile = GroupProfile::new(&witness.group);
    if !profile.is_nilpotent_sylow() || !profile.is_nilpotent_coprime() || profile.is_abelian() {
        return Err(ClassifierError::Verification(format!(
            "witness for ({m}, {n}) is not non-abelian nilpotent"
        )));
    }
    Ok(CertifiedWitness {
        kind: WitnessKind::NonAbelian { p },
        witness,
        certificate,
    })
}

/// Strongest property shared by every group of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NumberClass {
    Cyclic,
    Abelian,
    Nilpotent,
    None,
}

/// Classifies `n` via `gcd(n, ψ(n)) = 1` plus cube- and square-freeness.
///
/// The coprimality test is evaluated one factor `p^i − 1` of `ψ(n)` at a
/// time, so it never overflows even when `ψ(n)` itself would.
pub fn number_class(n: u64) -> Result<NumberClass> {
    let fac = numtheory::factorize(n)?;
    let nilpotent = fac.factors().iter().all(|&(p, e)| {
        let mut pi = 1u64;
        (0..e).all(|_| {
            pi *= p;
            gcd(n, pi - 1) == 1
        })
    });
    Ok(if !nilpotent {
        NumberClass::None
    } else if fac.is_square_free() {
        NumberClass::Cyclic
    } else if fac.is_cube_free() {
        NumberClass::Abelian
    } else {
        NumberClass::Nilpotent
    })
}
