//! Sums of element orders, relative to a subgroup, by brute force and in
//! closed form, plus the upper bounds checked by the verifier.
//!
//! All values are exact integers. The brute-force evaluators are the oracle;
//! the closed forms are cross-checked against them.

use crate::constructors::{factorize, prime_check};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{is_normal, is_normal_in, quotient};

/// An exact sum of (relative) element orders.
pub type PsiValue = u64;

/// `ψ_H(G)`: the sum over `x ∈ G` of the least `m ≥ 1` with `x^m ∈ H`.
pub fn psi_rel(g: &FiniteGroup, h: &Subgroup) -> Result<PsiValue> {
    g.check_subgroup(h)?;
    Ok(psi_rel_unchecked(g, h))
}

pub(crate) fn psi_rel_unchecked(g: &FiniteGroup, h: &Subgroup) -> PsiValue {
    (0..g.order())
        .map(|x| g.rel_order_of(h, x) as PsiValue)
        .sum()
}

/// `ψ(G)`: the sum of all element orders.
pub fn psi(g: &FiniteGroup) -> PsiValue {
    (0..g.order()).map(|x| g.order_of(x) as PsiValue).sum()
}

/// `ψ(C_{p^n}) = (p^{2n+1} + 1) / (p + 1)`.
pub fn psi_cyclic_prime_power(p: u64, n: u32) -> Result<PsiValue> {
    prime_check(p)?;
    let p = p as u128;
    let top = 2u32
        .checked_mul(n)
        .and_then(|e| e.checked_add(1))
        .and_then(|e| p.checked_pow(e))
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("psi of a cyclic prime-power group"))?;
    if top % (p + 1) != 0 {
        return Err(Error::Inconsistent(format!(
            "p^(2n+1)+1 = {top} not divisible by p+1 = {}",
            p + 1
        )));
    }
    PsiValue::try_from(top / (p + 1))
        .map_err(|_| Error::Overflow("psi of a cyclic prime-power group"))
}

/// `ψ(C_n)`, multiplicative over the prime factorization of `n`.
pub fn psi_cyclic(n: u64) -> Result<PsiValue> {
    if n == 0 {
        return Err(Error::Domain("cyclic order must be at least 1".into()));
    }
    factorize(n)
        .into_iter()
        .try_fold(1 as PsiValue, |acc, (p, e)| {
            acc.checked_mul(psi_cyclic_prime_power(p, e)?)
                .ok_or(Error::Overflow("psi of a cyclic group"))
        })
}

/// `ψ_{H_m}(C_n) = m · ψ(C_{n/m})`.
pub fn psi_rel_cyclic(n: u64, m: u64) -> Result<PsiValue> {
    if n == 0 || m == 0 || !n.is_multiple_of(m) {
        return Err(Error::NotDivisor { n, m });
    }
    m.checked_mul(psi_cyclic(n / m)?)
        .ok_or(Error::Overflow("relative psi of a cyclic group"))
}

/// `[K:H]·ψ_K(G) − |K| + |H|`, an upper bound for `ψ_H(G)` whenever
/// `H ⊴ K ≤ G`. Normality is checked inside `K` only.
pub fn relative_index_bound(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<PsiValue> {
    if !is_normal_in(g, h, k)? {
        return Err(Error::NotNormal(" in K"));
    }
    Ok(index_bound_value(
        psi_rel_unchecked(g, k),
        h.order(),
        k.order(),
    ))
}

pub(crate) fn index_bound_value(psi_k: PsiValue, h_order: usize, k_order: usize) -> PsiValue {
    (k_order / h_order) as PsiValue * psi_k - k_order as PsiValue + h_order as PsiValue
}

/// `|K|²·ψ(G/K) − |K| + 1`, an upper bound for `ψ(G)` when `K ⊴ G`.
///
/// Also evaluates the equivalent form `|K|·ψ_K(G) − |K| + 1` and fails if
/// the two disagree.
pub fn normal_quotient_bound(g: &FiniteGroup, k: &Subgroup) -> Result<PsiValue> {
    if !is_normal(g, k)? {
        return Err(Error::NotNormal(" in G"));
    }
    let (via_quotient, via_relative) = normal_quotient_bound_forms(g, k)?;
    if via_quotient != via_relative {
        return Err(Error::Inconsistent(format!(
            "quotient form {via_quotient} differs from relative form {via_relative}"
        )));
    }
    Ok(via_quotient)
}

/// Both forms of the normal-subgroup bound: `(|K|²·ψ(G/K) − |K| + 1,
/// |K|·ψ_K(G) − |K| + 1)`.
pub(crate) fn normal_quotient_bound_forms(
    g: &FiniteGroup,
    k: &Subgroup,
) -> Result<(PsiValue, PsiValue)> {
    let ko = k.order() as PsiValue;
    let q = quotient(g, k)?;
    let via_quotient = ko * ko * psi(&q) - ko + 1;
    let via_relative = ko * psi_rel_unchecked(g, k) - ko + 1;
    Ok((via_quotient, via_relative))
}

/// `n² − n + 1`, an upper bound for `ψ` of any group of order `n`.
pub fn bound_global(n: u64) -> Result<PsiValue> {
    if n == 0 {
        return Err(Error::Domain("group order must be at least 1".into()));
    }
    n.checked_mul(n)
        .map(|sq| sq - n + 1)
        .ok_or(Error::Overflow("global bound"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::Builder;
    use crate::structure::{all_subgroups, cyclic_subgroup_of_order, generated_subgroup};
    use proptest::prelude::*;

    fn b() -> Builder {
        Builder::default()
    }

    #[test]
    fn psi_rel_examples() {
        let c4 = b().cyclic(4).unwrap();
        assert_eq!(
            psi_rel(&c4, &cyclic_subgroup_of_order(4, 2).unwrap()).unwrap(),
            6
        );
        let q8 = b().dicyclic(2).unwrap();
        assert_eq!(
            psi_rel(&q8, &generated_subgroup(&q8, &[1]).unwrap()).unwrap(),
            12
        );
        for g in [q8, b().sym(4).unwrap()] {
            assert_eq!(psi_rel(&g, &Subgroup::full(&g)).unwrap(), g.order() as u64);
        }
        assert!(psi_rel(&c4, &Subgroup::trivial(&b().cyclic(5).unwrap())).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&b().sym(3).unwrap()), 13);
        assert_eq!(psi(&b().cyclic(6).unwrap()), 21);
        assert_eq!(psi(&b().cyclic(1).unwrap()), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(psi_cyclic_prime_power(2, 2).unwrap(), 11);
        assert_eq!(psi_cyclic_prime_power(2, 3).unwrap(), 43);
        assert_eq!(psi_cyclic_prime_power(7, 0).unwrap(), 1);
        assert!(matches!(
            psi_cyclic_prime_power(6, 1),
            Err(Error::NotPrime(6))
        ));
        assert!(matches!(
            psi_cyclic_prime_power(2, 40),
            Err(Error::Overflow(_))
        ));
        assert_eq!(psi_cyclic(6).unwrap(), 21);
        assert_eq!(psi_cyclic(12).unwrap(), 77);
        assert_eq!(psi_cyclic(1).unwrap(), 1);
        assert_eq!(psi_rel_cyclic(12, 2).unwrap(), 42);
        assert_eq!(psi_rel_cyclic(8, 4).unwrap(), 12);
        assert_eq!(psi_rel_cyclic(9, 9).unwrap(), 9);
        assert!(matches!(
            psi_rel_cyclic(12, 5),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for n in 1..=128u64 {
            let cn = b().cyclic(n as usize).unwrap();
            assert_eq!(psi_cyclic(n).unwrap(), psi(&cn), "n = {n}");
            for m in (1..=n).filter(|m| n % m == 0) {
                let hm = cyclic_subgroup_of_order(n as usize, m as usize).unwrap();
                assert_eq!(psi_rel_cyclic(n, m).unwrap(), psi_rel(&cn, &hm).unwrap());
            }
        }
    }

    #[test]
    fn relative_index_bound_examples() {
        let c4 = b().cyclic(4).unwrap();
        let k = cyclic_subgroup_of_order(4, 2).unwrap();
        assert_eq!(
            relative_index_bound(&c4, &Subgroup::trivial(&c4), &k).unwrap(),
            11
        );
        let full = Subgroup::full(&c4);
        assert_eq!(relative_index_bound(&c4, &full, &full).unwrap(), 4);

        let q8 = b().dicyclic(2).unwrap();
        let center = generated_subgroup(&q8, &[2]).unwrap();
        let i = generated_subgroup(&q8, &[1]).unwrap();
        assert_eq!(relative_index_bound(&q8, &center, &i).unwrap(), 22);
        assert_eq!(psi_rel(&q8, &center).unwrap(), 14);
        assert!(matches!(
            relative_index_bound(&q8, &i, &center),
            Err(Error::NotContained)
        ));

        let s3 = b().sym(3).unwrap();
        let t = generated_subgroup(&s3, &[1]).unwrap();
        assert!(matches!(
            relative_index_bound(&s3, &t, &Subgroup::full(&s3)),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn normal_quotient_bound_examples() {
        let q8 = b().dicyclic(2).unwrap();
        let center = generated_subgroup(&q8, &[2]).unwrap();
        assert_eq!(normal_quotient_bound(&q8, &center).unwrap(), 27);
        assert_eq!(psi(&q8), 27);
        let s4 = b().sym(4).unwrap();
        assert_eq!(
            normal_quotient_bound(&s4, &Subgroup::trivial(&s4)).unwrap(),
            psi(&s4)
        );
        let c4 = b().cyclic(4).unwrap();
        assert_eq!(
            normal_quotient_bound(&c4, &cyclic_subgroup_of_order(4, 2).unwrap()).unwrap(),
            11
        );
        let s3 = b().sym(3).unwrap();
        assert!(normal_quotient_bound(&s3, &generated_subgroup(&s3, &[1]).unwrap()).is_err());
    }

    #[test]
    fn global_bound_examples() {
        assert_eq!(bound_global(3).unwrap(), 7);
        assert_eq!(psi(&b().cyclic(3).unwrap()), 7);
        assert_eq!(bound_global(4).unwrap(), 13);
        assert_eq!(bound_global(1).unwrap(), 1);
    }

    #[test]
    fn relative_psi_extremes() {
        for g in [
            b().dihedral(6).unwrap(),
            b().abelian(&[2, 4]).unwrap(),
            b().alt(4).unwrap(),
        ] {
            let n = g.order() as u64;
            for h in all_subgroups(&g) {
                let v = psi_rel(&g, &h).unwrap();
                if h.is_full() {
                    assert_eq!(v, n);
                } else {
                    assert!(v >= 2 * n - h.order() as u64);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn antitone_in_subgroup(which in 0usize..6, seed in any::<u64>()) {
            let g = match which {
                0 => b().sym(4).unwrap(),
                1 => b().dihedral(9).unwrap(),
                2 => b().dicyclic(4).unwrap(),
                3 => b().abelian(&[2, 6]).unwrap(),
                4 => b().heisenberg(3).unwrap(),
                _ => b().alt(5).unwrap(),
            };
            let subs = all_subgroups(&g);
            let h = &subs[(seed % subs.len() as u64) as usize];
            for k in subs.iter().filter(|k| h.is_subgroup_of(k)) {
                prop_assert!(psi_rel(&g, k).unwrap() <= psi_rel(&g, h).unwrap());
            }
        }
    }
}
