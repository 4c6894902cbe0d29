//! Exhaustive checks of the relative-order bounds over every subgroup of a
//! group, and sweeps of those checks over a catalog of groups.

mod catalog;
mod report;

pub use catalog::{catalog, scan_catalog, scan_specs, Family, ScanOptions, Suite};
pub use report::{CheckKind, CheckRecord, PsiRecord, Relation, VerificationReport};

use crate::constructors::Builder;
use crate::error::{Error, Result};
use crate::group::{gcd, Element, FiniteGroup, Subgroup};
use crate::group_spec::is_prime;
use crate::psi::{self, index_bound_value, psi_rel_cyclic, PsiValue};
use crate::structure::{all_subgroups, generators, is_nilpotent, is_normal_with, quotient};
use crate::BitSet;

/// Per-subgroup data shared by every suite.
#[derive(Debug, Clone)]
pub struct SubgroupInfo {
    pub subgroup: Subgroup,
    pub generators: Vec<Element>,
    pub normal: bool,
    pub psi_h: PsiValue,
    /// Largest relative order; equals `[G:H]` iff `G/H` is cyclic (for normal `H`).
    max_rel_order: usize,
}

impl SubgroupInfo {
    pub fn quotient_cyclic(&self) -> Option<bool> {
        self.normal
            .then(|| self.max_rel_order == self.subgroup.index())
    }
}

/// A group with its full subgroup lattice and per-subgroup measurements.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub group: FiniteGroup,
    pub nilpotent: bool,
    pub subgroups: Vec<SubgroupInfo>,
}

impl Analysis {
    pub fn new(group: FiniteGroup) -> Self {
        let nilpotent = is_nilpotent(&group);
        let ggens = generators(&group, &Subgroup::full(&group));
        let subgroups = all_subgroups(&group)
            .into_iter()
            .map(|h| {
                let (mut psi_h, mut max_rel) = (0, 0);
                for x in 0..group.order() {
                    let r = group.rel_order_of(&h, x);
                    psi_h += r as PsiValue;
                    max_rel = max_rel.max(r);
                }
                SubgroupInfo {
                    generators: generators(&group, &h),
                    normal: is_normal_with(&group, &h, &ggens),
                    psi_h,
                    max_rel_order: max_rel,
                    subgroup: h,
                }
            })
            .collect();
        Self {
            group,
            nilpotent,
            subgroups,
        }
    }

    pub fn psi(&self) -> PsiValue {
        self.subgroups[0].psi_h
    }

    fn record(&self, s: &SubgroupInfo) -> Result<PsiRecord> {
        let n = self.group.order();
        let m = s.subgroup.order();
        let bound = psi_rel_cyclic(n as u64, m as u64)?;
        Ok(PsiRecord {
            group_id: self.group.name().to_string(),
            group_order: n,
            nilpotent: self.nilpotent,
            subgroup_order: m,
            subgroup_key: s.subgroup.key(),
            normal: s.normal,
            quotient_cyclic: s.quotient_cyclic(),
            psi_h: s.psi_h,
            bound,
            equality: s.psi_h == bound,
            violated: s.psi_h > bound,
        })
    }

    /// The cyclic-bound sweep with no nilpotency gate.
    pub(crate) fn sweep(&self, suite: &str) -> Result<VerificationReport> {
        let mut report = VerificationReport::new(suite);
        report.groups_checked = 1;
        for s in &self.subgroups {
            report.push_record(self.record(s)?);
        }
        Ok(report)
    }

    pub(crate) fn theorem(&self) -> Result<VerificationReport> {
        if !self.nilpotent {
            return Err(Error::NotNilpotent(self.group.name().to_string()));
        }
        self.sweep("theorem")
    }

    pub(crate) fn lemma_bounds(&self) -> Result<VerificationReport> {
        let g = &self.group;
        let id = g.name();
        let n = g.order();
        let mut report = VerificationReport::new("lemmas");
        report.groups_checked = 1;
        let key = |s: &SubgroupInfo| (s.subgroup.order(), s.subgroup.key());
        let trivial = &self.subgroups[0];

        for k in self.subgroups.iter().filter(|k| k.normal) {
            let q = quotient(g, &k.subgroup)?;
            let ko = k.subgroup.order() as PsiValue;
            let psi_q = psi::psi(&q);
            report.push_check(CheckRecord::new(
                id,
                n,
                CheckKind::NormalIdentity,
                Relation::Eq,
                key(k),
                key(k),
                k.psi_h,
                ko * psi_q,
            ));
            let via_relative = ko * k.psi_h - ko + 1;
            let via_quotient = ko * ko * psi_q - ko + 1;
            report.push_check(CheckRecord::new(
                id,
                n,
                CheckKind::NormalQuotientForms,
                Relation::Eq,
                key(trivial),
                key(k),
                via_relative,
                via_quotient,
            ));
            report.push_check(CheckRecord::new(
                id,
                n,
                CheckKind::NormalQuotientBound,
                Relation::Le,
                key(trivial),
                key(k),
                self.psi(),
                via_quotient,
            ));
        }

        for k in &self.subgroups {
            for h in &self.subgroups {
                if h.subgroup.order() > k.subgroup.order()
                    || !h.subgroup.is_subgroup_of(&k.subgroup)
                {
                    continue;
                }
                let normal_in_k = k.generators.iter().all(|&t| {
                    let ti = g.inv(t);
                    h.generators
                        .iter()
                        .all(|&s| h.subgroup.contains(g.op(g.op(t, s), ti)))
                });
                if !normal_in_k {
                    continue;
                }
                let rhs = index_bound_value(k.psi_h, h.subgroup.order(), k.subgroup.order());
                report.push_check(CheckRecord::new(
                    id,
                    n,
                    CheckKind::RelativeIndexBound,
                    Relation::Le,
                    key(h),
                    key(k),
                    h.psi_h,
                    rhs,
                ));
            }
        }

        let full = self.subgroups.last().expect("lattice contains G");
        let mut global = CheckRecord::new(
            id,
            n,
            CheckKind::GlobalBound,
            Relation::Le,
            key(trivial),
            key(full),
            self.psi(),
            psi::bound_global(n as u64)?,
        );
        // Equality must occur exactly at prime order; the trivial group
        // (1 = 1² − 1 + 1) is the one degenerate equality.
        let expected_equality = n == 1 || is_prime(n as u64);
        global.violated |= global.equality != expected_equality;
        report.push_check(global);
        Ok(report)
    }
}

/// Every subgroup of a nilpotent `g` against `ψ_{H_m}(C_n)`.
pub fn verify_theorem(g: &FiniteGroup) -> Result<VerificationReport> {
    Analysis::new(g.clone()).theorem()
}

/// The same sweep for any finite group; violations are conjecture
/// counterexamples and are reported, not raised.
pub fn verify_conjecture(g: &FiniteGroup) -> Result<VerificationReport> {
    Analysis::new(g.clone()).sweep("conjecture")
}

/// The normal-subgroup identity, the intermediate-subgroup bound for every
/// `H ⊴ K`, both forms of the normal-quotient bound, and the global bound.
pub fn verify_lemma_bounds(g: &FiniteGroup) -> Result<VerificationReport> {
    Analysis::new(g.clone()).lemma_bounds()
}

/// Both sides of the coprime product identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicativityWitness {
    /// `ψ_{H1×H2}(G1×G2)`.
    pub product: PsiValue,
    pub left: PsiValue,
    pub right: PsiValue,
}

impl MultiplicativityWitness {
    pub fn holds(&self) -> bool {
        self.left.checked_mul(self.right) == Some(self.product)
    }
}

/// `H1 × H2` as a subgroup of `direct_product(G1, G2)`.
pub fn product_subgroup(
    g1: &FiniteGroup,
    h1: &Subgroup,
    g2: &FiniteGroup,
    h2: &Subgroup,
) -> Result<Subgroup> {
    g1.check_subgroup(h1)?;
    g2.check_subgroup(h2)?;
    let n2 = g2.order();
    let mut bits = BitSet::new(g1.order() * n2);
    for a in h1.members().iter() {
        for b in h2.members().iter() {
            bits.insert(a * n2 + b);
        }
    }
    Ok(Subgroup::from_bits_unchecked(bits))
}

pub fn verify_multiplicativity(
    g1: &FiniteGroup,
    h1: &Subgroup,
    g2: &FiniteGroup,
    h2: &Subgroup,
) -> Result<MultiplicativityWitness> {
    if gcd(g1.order(), g2.order()) != 1 {
        return Err(Error::NotCoprime(g1.order(), g2.order()));
    }
    let prod = Builder::new(g1.order() * g2.order()).direct_product(g1, g2)?;
    let h = product_subgroup(g1, h1, g2, h2)?;
    Ok(MultiplicativityWitness {
        product: psi::psi_rel(&prod, &h)?,
        left: psi::psi_rel(g1, h1)?,
        right: psi::psi_rel(g2, h2)?,
    })
}

/// Multiplicativity over every subgroup pair of two analysed groups of
/// coprime order. In each check `h` is the subgroup of the first factor and
/// `k` the subgroup of the second.
pub(crate) fn multiplicativity_checks(a: &Analysis, b: &Analysis) -> Result<VerificationReport> {
    let (g1, g2) = (&a.group, &b.group);
    if gcd(g1.order(), g2.order()) != 1 {
        return Err(Error::NotCoprime(g1.order(), g2.order()));
    }
    let prod = Builder::new(g1.order() * g2.order()).direct_product(g1, g2)?;
    let id = prod.name().to_string();
    let mut report = VerificationReport::new("multiplicativity");
    report.groups_checked = 1;
    for h1 in &a.subgroups {
        for h2 in &b.subgroups {
            let h = product_subgroup(g1, &h1.subgroup, g2, &h2.subgroup)?;
            let lhs = psi::psi_rel(&prod, &h)?;
            report.push_check(CheckRecord::new(
                &id,
                prod.order(),
                CheckKind::CoprimeMultiplicativity,
                Relation::Eq,
                (h1.subgroup.order(), h1.subgroup.key()),
                (h2.subgroup.order(), h2.subgroup.key()),
                lhs,
                h1.psi_h * h2.psi_h,
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::sym_index;
    use crate::structure::{cyclic_subgroup_of_order, generated_subgroup};

    fn b() -> Builder {
        Builder::default()
    }

    #[test]
    fn q8_theorem_records() {
        let q8 = b().dicyclic(2).unwrap();
        let r = verify_theorem(&q8).unwrap();
        assert_eq!((r.records.len(), r.violations), (6, 0));
        let eq: Vec<_> = r
            .records
            .iter()
            .filter(|x| x.equality)
            .map(|x| (x.subgroup_order, x.psi_h))
            .collect();
        assert_eq!(eq, vec![(4, 12), (4, 12), (4, 12), (8, 8)]);
        let center = r.records.iter().find(|x| x.subgroup_order == 2).unwrap();
        assert_eq!(
            (center.psi_h, center.bound, center.quotient_cyclic),
            (14, 22, Some(false))
        );
    }

    #[test]
    fn cyclic_theorem_is_all_equalities() {
        let r = verify_theorem(&b().cyclic(12).unwrap()).unwrap();
        assert_eq!(r.records.len(), 6);
        assert!(r
            .records
            .iter()
            .all(|x| x.equality && x.quotient_cyclic == Some(true)));
    }

    #[test]
    fn dihedral_theorem_trivial_subgroup() {
        let r = verify_theorem(&b().dihedral(4).unwrap()).unwrap();
        let t = &r.records[0];
        assert_eq!(
            (t.subgroup_order, t.psi_h, t.bound, t.violated),
            (1, 19, 43, false)
        );
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn theorem_rejects_non_nilpotent() {
        assert!(matches!(
            verify_theorem(&b().sym(3).unwrap()),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn s3_conjecture_records() {
        let s3 = b().sym(3).unwrap();
        let r = verify_conjecture(&s3).unwrap();
        assert_eq!((r.records.len(), r.violations), (6, 0));
        let t = generated_subgroup(&s3, &[sym_index(&[1, 0, 2]).unwrap()]).unwrap();
        let c = generated_subgroup(&s3, &[sym_index(&[1, 2, 0]).unwrap()]).unwrap();
        let rt = r
            .records
            .iter()
            .find(|x| x.subgroup_key == t.key())
            .unwrap();
        assert_eq!((rt.psi_h, rt.bound, rt.normal), (12, 14, false));
        let rc = r
            .records
            .iter()
            .find(|x| x.subgroup_key == c.key())
            .unwrap();
        assert_eq!(
            (rc.psi_h, rc.bound, rc.equality, rc.quotient_cyclic),
            (9, 9, true, Some(true))
        );
    }

    #[test]
    fn larger_conjecture_examples() {
        let r = verify_conjecture(&b().sym(4).unwrap()).unwrap();
        assert_eq!((r.records.len(), r.violations), (30, 0));
        let a4 = verify_conjecture(&b().alt(4).unwrap()).unwrap();
        assert_eq!((a4.records[0].psi_h, a4.records[0].bound), (31, 77));
    }

    #[test]
    fn s5_equality_without_normality() {
        let r = verify_conjecture(&b().sym(5).unwrap()).unwrap();
        assert_eq!((r.records.len(), r.violations), (156, 0));
        let odd: Vec<_> = r.unexplained_equalities().collect();
        assert_eq!(odd.len(), 6);
        assert!(odd
            .iter()
            .all(|x| x.subgroup_order == 20 && !x.normal && (x.psi_h, x.bound) == (420, 420)));
    }

    #[test]
    fn bound_suite_examples() {
        let r = verify_lemma_bounds(&b().cyclic(4).unwrap()).unwrap();
        assert_eq!(r.violations, 0);
        let c = r
            .checks
            .iter()
            .find(|c| c.check == CheckKind::RelativeIndexBound && c.h_order == 1 && c.k_order == 2)
            .unwrap();
        assert_eq!((c.lhs, c.rhs), (11, 11));
        let g = r
            .checks
            .iter()
            .find(|c| c.check == CheckKind::GlobalBound)
            .unwrap();
        assert_eq!((g.lhs, g.rhs, g.equality), (11, 13, false));

        let q8 = verify_lemma_bounds(&b().dicyclic(2).unwrap()).unwrap();
        assert_eq!(q8.violations, 0);
        assert!(q8
            .checks
            .iter()
            .any(|c| c.check == CheckKind::NormalQuotientBound
                && c.k_order == 2
                && c.lhs == 27
                && c.rhs == 27));

        let c3 = verify_lemma_bounds(&b().cyclic(3).unwrap()).unwrap();
        let g = c3
            .checks
            .iter()
            .find(|c| c.check == CheckKind::GlobalBound)
            .unwrap();
        assert_eq!((g.lhs, g.rhs, g.equality, g.violated), (7, 7, true, false));
    }

    #[test]
    fn multiplicativity_examples() {
        let c2 = b().cyclic(2).unwrap();
        let c3 = b().cyclic(3).unwrap();
        let c4 = b().cyclic(4).unwrap();
        let w = verify_multiplicativity(&c2, &Subgroup::trivial(&c2), &c3, &Subgroup::trivial(&c3))
            .unwrap();
        assert_eq!((w.left, w.right, w.product), (3, 7, 21));
        let h = cyclic_subgroup_of_order(4, 2).unwrap();
        let w = verify_multiplicativity(&c4, &h, &c3, &Subgroup::trivial(&c3)).unwrap();
        assert_eq!((w.left, w.right, w.product), (6, 7, 42));
        assert!(w.holds());
        let s3 = b().sym(3).unwrap();
        let c5 = b().cyclic(5).unwrap();
        let w =
            verify_multiplicativity(&s3, &Subgroup::full(&s3), &c5, &Subgroup::full(&c5)).unwrap();
        assert_eq!(w.product, 30);
        assert!(matches!(
            verify_multiplicativity(&c2, &Subgroup::trivial(&c2), &c4, &Subgroup::trivial(&c4)),
            Err(Error::NotCoprime(2, 4))
        ));
    }
}
