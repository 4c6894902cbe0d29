//! Subgroup lattice, normality, quotients, Sylow subgroups and nilpotency.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::constructors::{factorize, prime_check};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup, IDENTITY};

/// Grows `start` (a subgroup's members, or just the identity) into the
/// subgroup generated by it together with `gens`.
///
/// Right cosets of the starting subgroup are added whole, so each new
/// element costs one membership test per generator.
fn close(g: &FiniteGroup, start: &BitSet, gens: &[Element]) -> BitSet {
    let base: Vec<Element> = start.iter().collect();
    let mut members = start.clone();
    let mut reps = vec![IDENTITY];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        for &s in gens {
            let y = g.op(r, s);
            if !members.contains(y) {
                for &h in &base {
                    members.insert(g.op(h, y));
                }
                reps.push(y);
            }
        }
        i += 1;
    }
    members
}

/// Smallest subgroup containing every element of `seed`.
pub fn generated_subgroup(g: &FiniteGroup, seed: &[Element]) -> Result<Subgroup> {
    for &s in seed {
        g.mul(s, IDENTITY)?;
    }
    let mut start = BitSet::new(g.order());
    start.insert(IDENTITY);
    Ok(Subgroup::from_bits_unchecked(close(g, &start, seed)))
}

/// A generating set for `h`, chosen greedily, highest element order first.
pub fn generators(g: &FiniteGroup, h: &Subgroup) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(g).members().clone();
    let mut candidates: Vec<Element> = h.members().iter().collect();
    candidates.sort_by_key(|&x| std::cmp::Reverse(g.order_of(x)));
    for x in candidates {
        if !span.contains(x) {
            gens.push(x);
            span = close(g, &span, &gens);
        }
    }
    gens
}

/// Every subgroup of `g`, each once, ascending by order then member list.
///
/// Starts from the cyclic subgroups and joins each discovered subgroup with
/// every cyclic subgroup not already inside it until nothing new appears.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut cyclic: Vec<(Element, BitSet)> = Vec::new();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut id = BitSet::new(n);
    id.insert(IDENTITY);
    for x in 0..n {
        let c = close(g, &id, &[x]);
        if seen.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }

    // (members, generators)
    let mut found: Vec<(BitSet, Vec<Element>)> =
        cyclic.iter().map(|(x, c)| (c.clone(), vec![*x])).collect();
    let mut i = 0;
    while i < found.len() {
        for (x, c) in &cyclic {
            let (members, gens) = &found[i];
            if c.is_subset(members) {
                continue;
            }
            let joined = close(g, members, &gens_with(gens, *x));
            if seen.insert(joined.clone()) {
                let gens = gens_with(gens, *x);
                found.push((joined, gens));
            }
        }
        i += 1;
    }

    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|(m, _)| Subgroup::from_bits_unchecked(m))
        .collect();
    out.sort();
    out
}

fn gens_with(gens: &[Element], x: Element) -> Vec<Element> {
    let mut v = Vec::with_capacity(gens.len() + 1);
    v.extend_from_slice(gens);
    v.push(x);
    v
}

/// True iff conjugating each of `hgens` by each of `by` stays in `h`, i.e.
/// `by` normalizes `h`.
fn normalizes(g: &FiniteGroup, h: &Subgroup, hgens: &[Element], by: &[Element]) -> bool {
    by.iter().all(|&t| {
        let ti = g.inv(t);
        hgens.iter().all(|&s| h.contains(g.op(g.op(t, s), ti)))
    })
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    g.check_subgroup(h)?;
    Ok(is_normal_with(g, h, &generators(g, &Subgroup::full(g))))
}

/// [`is_normal`] with the generators of `g` supplied by the caller.
pub(crate) fn is_normal_with(g: &FiniteGroup, h: &Subgroup, ggens: &[Element]) -> bool {
    normalizes(g, h, &generators(g, h), ggens)
}

/// Normality of `h` inside the intermediate subgroup `k`.
pub fn is_normal_in(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    g.check_subgroup(h)?;
    g.check_subgroup(k)?;
    if !h.is_subgroup_of(k) {
        return Err(Error::NotContained);
    }
    Ok(normalizes(g, h, &generators(g, h), &generators(g, k)))
}

/// Coset labelling for a normal subgroup: `labels[x]` is the coset of `x`;
/// cosets are numbered by ascending minimal element, which is also their
/// representative.
fn coset_labels(g: &FiniteGroup, h: &Subgroup) -> (Vec<usize>, Vec<Element>) {
    let n = g.order();
    let mut labels = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let hm = h.elements();
    for x in 0..n {
        if labels[x] == usize::MAX {
            for &y in &hm {
                labels[g.op(x, y)] = reps.len();
            }
            reps.push(x);
        }
    }
    (labels, reps)
}

/// `G/H` on cosets; coset representatives are minimal element indices and
/// the identity coset is index 0.
pub fn quotient(g: &FiniteGroup, h: &Subgroup) -> Result<FiniteGroup> {
    if !is_normal(g, h)? {
        return Err(Error::NotNormal(" in G; quotient undefined"));
    }
    let (labels, reps) = coset_labels(g, h);
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(labels[g.op(a, b)] as u32);
        }
    }
    let name = format!("{}/[{}]", g.name(), h.key());
    Ok(FiniteGroup::from_table_unchecked(name, m, table))
}

fn p_part(n: usize, p: usize) -> usize {
    let mut q = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// A Sylow `p`-subgroup, grown from the trivial group: while the current
/// p-subgroup `P` is too small, extend it by the least element of its
/// normalizer whose order relative to `P` is a nontrivial power of `p`.
pub fn sylow(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    prime_check(p)?;
    let p = p as usize;
    let target = p_part(g.order(), p);
    let mut cur = Subgroup::trivial(g);
    while cur.order() < target {
        let cur_gens = generators(g, &cur);
        let x = (0..g.order())
            .find(|&x| {
                let r = g.rel_order_of(&cur, x);
                r > 1 && is_power_of(r, p) && normalizes(g, &cur, &cur_gens, &[x])
            })
            .ok_or_else(|| {
                Error::Inconsistent(
                    "no p-element in the normalizer of a non-Sylow p-subgroup".into(),
                )
            })?;
        cur = Subgroup::from_bits_unchecked(close(g, cur.members(), &gens_with(&cur_gens, x)));
    }
    Ok(cur)
}

/// Finite nilpotency: every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    factorize(g.order() as u64).into_iter().all(|(p, _)| {
        let s = sylow(g, p).expect("prime from factorization");
        is_normal(g, &s).expect("own subgroup")
    })
}

/// The subgroup `H_m = {0, n/m, 2n/m, …}` of `cyclic(n)`.
pub fn cyclic_subgroup_of_order(n: usize, m: usize) -> Result<Subgroup> {
    if n == 0 || m == 0 || !n.is_multiple_of(m) {
        return Err(Error::NotDivisor {
            n: n as u64,
            m: m as u64,
        });
    }
    let mut bits = BitSet::new(n);
    for i in 0..m {
        bits.insert(i * (n / m));
    }
    Ok(Subgroup::from_bits_unchecked(bits))
}

/// Whether `G/H` is cyclic, decided from relative orders: some `x` has
/// `o_H(x) = [G:H]`.
pub fn quotient_is_cyclic(g: &FiniteGroup, h: &Subgroup) -> bool {
    let idx = h.index();
    (0..g.order()).any(|x| g.rel_order_of(h, x) == idx)
}
