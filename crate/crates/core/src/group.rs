//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..n` and index 0 is always the identity. A
//! [`FiniteGroup`] is immutable once built, so it can be shared freely across
//! worker threads.

use std::cmp::Ordering;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result, ValidationError};

/// Dense element index relative to one particular group.
pub type Element = usize;

/// The identity of every [`FiniteGroup`].
pub const IDENTITY: Element = 0;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    name: String,
}

impl FiniteGroup {
    /// Builds a group from a row-major table already known to satisfy the
    /// group axioms with identity at index 0.
    pub(crate) fn from_table_unchecked(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x == 0)
                .expect("row without identity");
            inverse[a] = b as u32;
        }
        Self {
            order,
            table,
            inverse,
            name: name.into(),
        }
    }

    /// Checks a candidate multiplication table against the group axioms.
    ///
    /// On success the element acting as identity is relabelled to index 0 by
    /// swapping it with whatever element held that label; all other labels are
    /// kept.
    pub fn validate(
        table: &[Vec<usize>],
        name: impl Into<String>,
    ) -> Result<Self, ValidationError> {
        let n = table.len();
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(ValidationError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(ValidationError::EntryOutOfRange {
                    row,
                    col,
                    value,
                    order: n,
                });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(ValidationError::NoIdentity)?;

        let mut seen = vec![usize::MAX; n];
        for (r, row) in table.iter().enumerate() {
            for &v in row {
                if seen[v] == r {
                    return Err(ValidationError::RowNotPermutation(r));
                }
                seen[v] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for row in table {
                let v = row[c];
                if seen[v] == c {
                    return Err(ValidationError::ColumnNotPermutation(c));
                }
                seen[v] = c;
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    let left = table[ab][c];
                    let right = table[a][table[b][c]];
                    if left != right {
                        return Err(ValidationError::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }

        let relabel = |x: usize| match x {
            x if x == identity => 0,
            0 => identity,
            x => x,
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        Ok(Self::from_table_unchecked(name, n, flat))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Product `a·b` without bounds reporting; panics on out-of-range input.
    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as Element
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a] as Element
    }

    fn check(&self, a: Element) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    pub fn mul(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.op(a, b))
    }

    pub fn inverse(&self, a: Element) -> Result<Element> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    /// `a` raised to the `k`-th power by repeated squaring.
    pub fn pow(&self, a: Element, k: u64) -> Result<Element> {
        self.check(a)?;
        let (mut base, mut k, mut acc) = (a, k, IDENTITY);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Order of `a`; panics on out-of-range input.
    pub fn order_of(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != IDENTITY {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn element_order(&self, a: Element) -> Result<usize> {
        self.check(a)?;
        Ok(self.order_of(a))
    }

    /// Smallest `m ≥ 1` with `a^m ∈ h`, found by walking the powers of `a`.
    pub fn rel_order(&self, h: &Subgroup, a: Element) -> Result<usize> {
        self.check(a)?;
        self.check_subgroup(h)?;
        Ok(self.rel_order_of(h, a))
    }

    #[inline]
    pub(crate) fn rel_order_of(&self, h: &Subgroup, a: Element) -> usize {
        let mut x = a;
        let mut m = 1;
        while !h.contains(x) {
            x = self.op(x, a);
            m += 1;
        }
        m
    }

    pub(crate) fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.parent_order != self.order {
            return Err(Error::InvalidSubgroup(format!(
                "subgroup belongs to a group of order {}, not {}",
                h.parent_order, self.order
            )));
        }
        Ok(())
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.order_of(a)).collect()
    }

    /// Element orders sorted ascending; the isomorphism invariant used in
    /// place of a full isomorphism test.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.element_orders();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.order_of(a) == self.order)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subgroup, held as a membership bitset over its parent's elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: BitSet,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_bits_unchecked(members: BitSet) -> Self {
        let order = members.count();
        Self {
            parent_order: members.len(),
            members,
            order,
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut bits = BitSet::new(g.order());
        bits.insert(IDENTITY);
        Self::from_bits_unchecked(bits)
    }

    pub fn full(g: &FiniteGroup) -> Self {
        Self::from_bits_unchecked(BitSet::full(g.order()))
    }

    /// Accepts `members` only if it contains the identity and is closed under
    /// the parent's multiplication and inversion.
    pub fn from_members(g: &FiniteGroup, members: BitSet) -> Result<Self> {
        if members.len() != g.order() {
            return Err(Error::InvalidSubgroup(format!(
                "membership vector has length {}, group has order {}",
                members.len(),
                g.order()
            )));
        }
        if !members.contains(IDENTITY) {
            return Err(Error::InvalidSubgroup("identity is not a member".into()));
        }
        let elems: Vec<_> = members.iter().collect();
        for &a in &elems {
            if !members.contains(g.inv(a)) {
                return Err(Error::InvalidSubgroup(format!(
                    "inverse of {a} is not a member"
                )));
            }
            for &b in &elems {
                if !members.contains(g.op(a, b)) {
                    return Err(Error::InvalidSubgroup(format!("{a}*{b} is not a member")));
                }
            }
        }
        let h = Self::from_bits_unchecked(members);
        debug_assert_eq!(g.order() % h.order, 0);
        Ok(h)
    }

    pub fn from_elements(g: &FiniteGroup, elements: &[Element]) -> Result<Self> {
        let mut bits = BitSet::new(g.order());
        for &e in elements {
            g.check(e)?;
            bits.insert(e);
        }
        Self::from_members(g, bits)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.order
    }

    #[inline]
    pub fn contains(&self, a: Element) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<Element> {
        self.members.iter().collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent_order == other.parent_order && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_full(&self) -> bool {
        self.order == self.parent_order
    }

    /// Canonical text key: hex membership bitset, bit `i` for element `i`.
    pub fn key(&self) -> String {
        self.members.to_hex()
    }
}

impl Ord for Subgroup {
    /// Ascending by order, then by sorted member list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.canonical_cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect()
    }

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::validate(&cyclic_rows(n), format!("C{n}")).unwrap()
    }

    #[test]
    fn c4_products() {
        let g = c(4);
        assert_eq!(g.mul(1, 3).unwrap(), 0);
        assert_eq!(g.mul(0, 2).unwrap(), 2);
        assert_eq!(g.pow(1, 2).unwrap(), 2);
        assert_eq!(g.pow(3, 0).unwrap(), IDENTITY);
        assert_eq!(g.element_order(1).unwrap(), 4);
        assert!(matches!(
            g.mul(4, 0),
            Err(Error::IndexOutOfRange { index: 4, order: 4 })
        ));
    }

    #[test]
    fn relative_orders_in_c12() {
        let g = c(12);
        let h = Subgroup::from_elements(&g, &[0, 6]).unwrap();
        assert_eq!(g.rel_order(&h, 1).unwrap(), 6);
        assert_eq!(g.rel_order(&h, 4).unwrap(), 3);
        let full = Subgroup::full(&g);
        assert!((0..12).all(|a| g.rel_order(&full, a).unwrap() == 1));
        let trivial = Subgroup::trivial(&g);
        assert!((0..12).all(|a| g.rel_order(&trivial, a).unwrap() == g.order_of(a)));
    }

    #[test]
    fn rel_order_rejects_foreign_subgroup() {
        let h = Subgroup::trivial(&c(4));
        assert!(matches!(
            c(6).rel_order(&h, 1),
            Err(Error::InvalidSubgroup(_))
        ));
    }

    #[test]
    fn small_tables_validate() {
        assert_eq!(c(3).order(), 3);
        let c2 = FiniteGroup::validate(&[vec![0, 1], vec![1, 0]], "C2").unwrap();
        assert_eq!(c2.element_order(1).unwrap(), 2);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C3 written with the identity as label 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::validate(&t, "C3").unwrap();
        assert_eq!(g.op(0, 1), 1);
        assert_eq!(g.op(1, 0), 1);
        assert_eq!(g.order_of(1), 3);
        assert_eq!(g.op(1, g.inv(1)), 0);
    }

    #[test]
    fn rejects_malformed_tables() {
        use ValidationError::*;
        assert_eq!(FiniteGroup::validate(&[], "x").unwrap_err(), Empty);
        assert!(matches!(
            FiniteGroup::validate(&[vec![0, 1], vec![1]], "x").unwrap_err(),
            NotSquare { row: 1, .. }
        ));
        assert!(matches!(
            FiniteGroup::validate(&[vec![0, 1], vec![1, 2]], "x").unwrap_err(),
            EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                ..
            }
        ));
        assert_eq!(
            FiniteGroup::validate(&[vec![0, 0], vec![1, 1]], "x").unwrap_err(),
            NoIdentity
        );
        let mut t = cyclic_rows(3);
        t[1][2] = 1;
        assert_eq!(
            FiniteGroup::validate(&t, "x").unwrap_err(),
            RowNotPermutation(1)
        );
    }

    #[test]
    fn subgroup_membership_checks() {
        let g = c(12);
        assert!(Subgroup::from_elements(&g, &[0, 4]).is_err());
        assert!(Subgroup::from_elements(&g, &[4, 8]).is_err());
        assert!(Subgroup::from_elements(&g, &[0, 12]).is_err());
        let h = Subgroup::from_elements(&g, &[0, 4, 8]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.index(), 4);
        assert_eq!(h.key(), "111");
    }
}
