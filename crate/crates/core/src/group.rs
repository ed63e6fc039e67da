//! Concrete finite groups: metacyclic groups given by Hölder presentations
//! and binary direct products of them.
//!
//! A Hölder presentation `(m, n, r, s)` defines
//!
//! ```text
//! ⟨u, v | u^m = 1, v^n = u^s, v⁻¹uv = u^r⟩,   r^n ≡ 1, (r − 1)s ≡ 0 (mod m)
//! ```
//!
//! a group of order `m·n` whose elements have the normal form `u^i v^j` with
//! `0 ≤ i < m`, `0 ≤ j < n`. The normal cyclic subgroup is always `⟨u⟩`.
//!
//! Elements are addressed two ways. [`GroupElement`] carries explicit
//! normal-form coordinates and is what the public API speaks. Internally
//! every element also has a dense [`ElementIndex`] in `0..order`, obtained
//! by reading the flattened coordinates as a mixed-radix number, so index
//! order coincides with lexicographic coordinate order. The analysis code
//! works on indices.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::numtheory::{self, gcd, pow_mod};

/// Default cap on the number of elements of any constructed group.
pub const DEFAULT_MAX_ORDER: u64 = 100_000;

/// Environment variable that overrides [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "BICYCLIC_MAX_ORDER";

/// The enumeration cap in effect for this process.
pub fn max_group_order() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}

pub type ElementIndex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid presentation (m={m}, n={n}, r={r}, s={s}): {reason}")]
    InvalidPresentation {
        m: u64,
        n: u64,
        r: u64,
        s: u64,
        reason: String,
    },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("element {0} is not a valid element of this group")]
    InvalidElement(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// Parameters `(m, n, r, s)` of a metacyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HolderPresentation {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub s: u64,
}

impl HolderPresentation {
    /// Validates the Hölder congruences.
    ///
    /// When `n = 1` the conjugation multiplier is meaningless and is replaced
    /// by `1`; when `m = 1` both `r` and `s` collapse to `0`.
    pub fn new(m: u64, n: u64, r: u64, s: u64) -> Result<Self> {
        let invalid = |reason: String| GroupError::InvalidPresentation { m, n, r, s, reason };
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive".into()));
        }
        if m == 1 {
            return Ok(Self { m, n, r: 0, s: 0 });
        }
        if s >= m {
            return Err(invalid(format!("s must lie in [0, {m})")));
        }
        let r = if n == 1 {
            1
        } else if r >= m {
            return Err(invalid(format!("r must lie in [0, {m})")));
        } else {
            r
        };
        if gcd(r, m) != 1 {
            return Err(invalid(format!("gcd(r, m) = {} != 1", gcd(r, m))));
        }
        if pow_mod(r, n, m) != 1 {
            return Err(invalid(format!(
                "r^n ≡ {} (mod m), expected 1",
                pow_mod(r, n, m)
            )));
        }
        let lhs = ((r + m - 1) % m) as u128 * s as u128 % m as u128;
        if lhs != 0 {
            return Err(invalid(format!("(r - 1)·s ≡ {lhs} (mod m), expected 0")));
        }
        Ok(Self { m, n, r, s })
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// Order of the quotient generator `v`: `n·m / gcd(m, s)`, with `gcd(m, 0) = m`.
    pub fn quotient_generator_order(&self) -> u64 {
        self.n * (self.m / gcd(self.m, self.s))
    }

    pub fn is_abelian(&self) -> bool {
        self.r % self.m == 1 % self.m
    }
}

impl fmt::Display for HolderPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.n, self.r, self.s)
    }
}

/// The group defined by a [`HolderPresentation`], with conjugation powers
/// precomputed.
#[derive(Debug, Clone)]
pub struct HolderGroup {
    presentation: HolderPresentation,
    // inv_powers[j] = r^{-j} mod m
    inv_powers: Arc<[u64]>,
}

impl HolderGroup {
    pub fn presentation(&self) -> HolderPresentation {
        self.presentation
    }

    #[inline]
    fn decode(&self, idx: ElementIndex) -> (u64, u64) {
        let n = self.presentation.n as usize;
        ((idx / n) as u64, (idx % n) as u64)
    }

    #[inline]
    fn encode(&self, i: u64, j: u64) -> ElementIndex {
        (i * self.presentation.n + j) as usize
    }

    // u^{i1} v^{j1} · u^{i2} v^{j2} = u^{i1 + i2·r^{-j1} + s·carry} v^{(j1+j2) mod n}
    #[inline]
    fn mul(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        let HolderPresentation { m, n, s, .. } = self.presentation;
        let (i1, j1) = self.decode(a);
        let (i2, j2) = self.decode(b);
        let mut j = j1 + j2;
        let mut i = i1 + i2 * self.inv_powers[j1 as usize];
        if j >= n {
            j -= n;
            i += s;
        }
        self.encode(i % m, j)
    }
}

/// A finite group: a Hölder group or a binary direct product.
#[derive(Debug, Clone)]
pub enum FiniteGroup {
    Holder(HolderGroup),
    Product(Box<DirectProduct>),
}

#[derive(Debug, Clone)]
pub struct DirectProduct {
    left: FiniteGroup,
    right: FiniteGroup,
    right_order: usize,
}

impl DirectProduct {
    pub fn left(&self) -> &FiniteGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteGroup {
        &self.right
    }
}

/// Normal-form coordinates of one element.
///
/// Serialized as `[i, j]` for a Hölder element and `[left, right]` for a
/// direct-product element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// `u^i v^j`
    Holder {
        i: u64,
        j: u64,
    },
    Pair(Box<GroupElement>, Box<GroupElement>),
}

impl GroupElement {
    pub fn holder(i: u64, j: u64) -> Self {
        GroupElement::Holder { i, j }
    }

    pub fn pair(left: GroupElement, right: GroupElement) -> Self {
        GroupElement::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Holder { i, j } => write!(f, "({i},{j})"),
            GroupElement::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        match self {
            GroupElement::Holder { i, j } => {
                seq.serialize_element(i)?;
                seq.serialize_element(j)?;
            }
            GroupElement::Pair(l, r) => {
                seq.serialize_element(l)?;
                seq.serialize_element(r)?;
            }
        }
        seq.end()
    }
}

/// Serialized as `{"m":…,"n":…,"r":…,"s":…}` or `{"product":[left,right]}`.
impl Serialize for FiniteGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FiniteGroup::Holder(h) => h.presentation.serialize(serializer),
            FiniteGroup::Product(p) => {
                let mut st = serializer.serialize_struct("DirectProduct", 1)?;
                st.serialize_field("product", &[&p.left, &p.right])?;
                st.end()
            }
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteGroup::Holder(h) => write!(f, "Holder{}", h.presentation),
            FiniteGroup::Product(p) => write!(f, "{} x {}", p.left, p.right),
        }
    }
}

fn check_cap(order: u64) -> Result<()> {
    let cap = max_group_order();
    if order > cap {
        return Err(GroupError::CapExceeded { order, cap });
    }
    Ok(())
}

/// Builds the group of a validated Hölder presentation.
pub fn make_holder_group(m: u64, n: u64, r: u64, s: u64) -> Result<FiniteGroup> {
    let pres = HolderPresentation::new(m, n, r, s)?;
    FiniteGroup::holder(pres)
}

/// `G × H` with componentwise multiplication.
pub fn direct_product(left: FiniteGroup, right: FiniteGroup) -> Result<FiniteGroup> {
    let order = (left.order() as u64)
        .checked_mul(right.order() as u64)
        .ok_or(GroupError::CapExceeded {
            order: u64::MAX,
            cap: max_group_order(),
        })?;
    check_cap(order)?;
    let right_order = right.order();
    Ok(FiniteGroup::Product(Box::new(DirectProduct {
        left,
        right,
        right_order,
    })))
}

impl FiniteGroup {
    pub fn holder(presentation: HolderPresentation) -> Result<Self> {
        let HolderPresentation { m, n, r, .. } = presentation;
        let order = m.checked_mul(n).ok_or(GroupError::CapExceeded {
            order: u64::MAX,
            cap: max_group_order(),
        })?;
        check_cap(order)?;
        let inv_powers = (0..n).map(|j| pow_mod(r, (n - j) % n, m)).collect();
        Ok(FiniteGroup::Holder(HolderGroup {
            presentation,
            inv_powers,
        }))
    }

    pub fn as_holder(&self) -> Option<&HolderGroup> {
        match self {
            FiniteGroup::Holder(h) => Some(h),
            FiniteGroup::Product(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FiniteGroup::Holder(h) => h.presentation.order() as usize,
            FiniteGroup::Product(p) => p.left.order() * p.right_order,
        }
    }

    /// Every Hölder block appearing in this group, left to right.
    pub fn holder_blocks(&self) -> Vec<HolderPresentation> {
        match self {
            FiniteGroup::Holder(h) => vec![h.presentation],
            FiniteGroup::Product(p) => {
                let mut v = p.left.holder_blocks();
                v.extend(p.right.holder_blocks());
                v
            }
        }
    }

    // ---- index-level arithmetic -------------------------------------------

    #[inline]
    pub fn identity_index(&self) -> ElementIndex {
        0
    }

    #[inline]
    pub fn mul_index(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        match self {
            FiniteGroup::Holder(h) => h.mul(a, b),
            FiniteGroup::Product(p) => {
                let ro = p.right_order;
                let l = p.left.mul_index(a / ro, b / ro);
                let r = p.right.mul_index(a % ro, b % ro);
                l * ro + r
            }
        }
    }

    /// `a^k` by square-and-multiply.
    pub fn pow_index(&self, a: ElementIndex, mut k: u64) -> ElementIndex {
        let mut base = a;
        let mut acc = self.identity_index();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_index(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_index(base, base);
            }
        }
        acc
    }

    /// Order of the element at `a`, by refining `|G|` over its prime divisors.
    pub fn order_of_index(&self, a: ElementIndex, order_primes: &[u64]) -> u64 {
        let mut ord = self.order() as u64;
        for &p in order_primes {
            while ord % p == 0 && self.pow_index(a, ord / p) == self.identity_index() {
                ord /= p;
            }
        }
        ord
    }

    /// Distinct primes dividing `|G|`.
    pub fn order_primes(&self) -> Vec<u64> {
        numtheory::factorize(self.order() as u64)
            .map(|f| f.primes().collect())
            .unwrap_or_default()
    }

    pub fn inverse_index(&self, a: ElementIndex) -> ElementIndex {
        let ord = self.order_of_index(a, &self.order_primes());
        self.pow_index(a, ord - 1)
    }

    pub fn element_at(&self, idx: ElementIndex) -> GroupElement {
        match self {
            FiniteGroup::Holder(h) => {
                let (i, j) = h.decode(idx);
                GroupElement::holder(i, j)
            }
            FiniteGroup::Product(p) => GroupElement::pair(
                p.left.element_at(idx / p.right_order),
                p.right.element_at(idx % p.right_order),
            ),
        }
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<ElementIndex> {
        let bad = || GroupError::InvalidElement(x.to_string());
        match (self, x) {
            (FiniteGroup::Holder(h), GroupElement::Holder { i, j }) => {
                let HolderPresentation { m, n, .. } = h.presentation;
                if *i >= m || *j >= n {
                    return Err(bad());
                }
                Ok(h.encode(*i, *j))
            }
            (FiniteGroup::Product(p), GroupElement::Pair(l, r)) => {
                Ok(p.left.index_of(l)? * p.right_order + p.right.index_of(r)?)
            }
            _ => Err(bad()),
        }
    }

    // ---- element-level API ------------------------------------------------

    pub fn identity(&self) -> GroupElement {
        self.element_at(self.identity_index())
    }

    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        Ok(self.element_at(self.mul_index(self.index_of(x)?, self.index_of(y)?)))
    }

    /// Inverse computed as `x^{|x| − 1}`.
    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        Ok(self.element_at(self.inverse_index(self.index_of(x)?)))
    }

    /// `x^k` for any integer `k`, negative exponents allowed.
    pub fn power(&self, x: &GroupElement, k: i64) -> Result<GroupElement> {
        let idx = self.index_of(x)?;
        let ord = self.order_of_index(idx, &self.order_primes());
        let e = (k as i128).rem_euclid(ord as i128) as u64;
        Ok(self.element_at(self.pow_index(idx, e)))
    }

    pub fn element_order(&self, x: &GroupElement) -> Result<u64> {
        Ok(self.order_of_index(self.index_of(x)?, &self.order_primes()))
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let (a, b) = (self.index_of(x)?, self.index_of(y)?);
        let lhs = self.mul_index(self.inverse_index(a), self.inverse_index(b));
        let rhs = self.mul_index(a, b);
        Ok(self.element_at(self.mul_index(lhs, rhs)))
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        check_cap(self.order() as u64)?;
        Ok((0..self.order()).map(|i| self.element_at(i)).collect())
    }

    /// Indices of `⟨a⟩` in the order `a^0, a^1, …`.
    pub fn cyclic_subgroup_indices(&self, a: ElementIndex) -> Vec<ElementIndex> {
        let id = self.identity_index();
        let mut out = vec![id];
        let mut x = a;
        while x != id {
            out.push(x);
            x = self.mul_index(x, a);
        }
        out
    }

    /// `⟨x⟩`, sorted lexicographically.
    pub fn cyclic_subgroup(&self, x: &GroupElement) -> Result<Vec<GroupElement>> {
        let mut idx = self.cyclic_subgroup_indices(self.index_of(x)?);
        idx.sort_unstable();
        Ok(idx.into_iter().map(|i| self.element_at(i)).collect())
    }

    /// Lexicographically least element of maximal order in a subgroup.
    pub fn canonical_generator(&self, subgroup: &[GroupElement]) -> Result<GroupElement> {
        let primes = self.order_primes();
        let mut best: Option<(u64, ElementIndex)> = None;
        for x in subgroup {
            let idx = self.index_of(x)?;
            let ord = self.order_of_index(idx, &primes);
            best = match best {
                Some((o, i)) if o > ord || (o == ord && i < idx) => Some((o, i)),
                _ => Some((ord, idx)),
            };
        }
        best.map(|(_, i)| self.element_at(i))
            .ok_or_else(|| GroupError::InvalidElement("empty subgroup".into()))
    }
}
