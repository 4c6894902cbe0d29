//! Catalog group families, permutation closure, and group file readers.
//!
//! Element orderings are fixed per family:
//!
//! | family | element at index `i` |
//! |---|---|
//! | `cyclic(n)` | `i` in Z/n |
//! | `direct_product(A, B)` | pair `(i / |B|, i % |B|)` |
//! | `dihedral(m)` | `r^(i % m) s^(i / m)` |
//! | `dicyclic(m)` | `a^(i % 2m) b^(i / 2m)` |
//! | `sym(k)`, `alt(k)` | `i`-th permutation of `0..k` in lexicographic one-line order |
//! | `heisenberg(p)` | `(i / p², (i / p) % p, i % p)` |
//!
//! Permutations compose right to left: `(a·b)(x) = a(b(x))`.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::group_spec::{is_prime, GroupSpec};

/// Default ceiling on group order.
pub const DEFAULT_CAP: usize = 512;

/// Builds groups subject to an order cap.
#[derive(Debug, Clone, Copy)]
pub struct Builder {
    cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

fn table_from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut t = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            t.push(f(a, b) as u32);
        }
    }
    t
}

impl Builder {
    pub fn new(cap: usize) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn ensure(&self, order: usize) -> Result<()> {
        if order > self.cap {
            Err(Error::CapExceeded {
                order,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn build(&self, spec: &GroupSpec) -> Result<FiniteGroup> {
        spec.check_domain()?;
        match spec {
            GroupSpec::Cyclic(n) => self.cyclic(*n),
            GroupSpec::Abelian(inv) => self.abelian(inv),
            GroupSpec::Dihedral(m) => self.dihedral(*m),
            GroupSpec::Dicyclic(m) => self.dicyclic(*m),
            GroupSpec::Sym(k) => self.sym(*k),
            GroupSpec::Alt(k) => self.alt(*k),
            GroupSpec::Heisenberg(p) => self.heisenberg(*p),
            GroupSpec::Product(a, b) => {
                let (a, b) = (self.build(a)?, self.build(b)?);
                Ok(self.direct_product(&a, &b)?.with_name(spec.to_string()))
            }
            GroupSpec::CayleyFile(path) => self.from_cayley_file(path),
            GroupSpec::PermFile(path) => self.from_perm_file(path),
        }
    }

    pub fn cyclic(&self, n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::Domain("cyclic order must be at least 1".into()));
        }
        self.ensure(n)?;
        Ok(FiniteGroup::from_table_unchecked(
            GroupSpec::Cyclic(n).to_string(),
            n,
            table_from_fn(n, |a, b| (a + b) % n),
        ))
    }

    /// `A × B` with the pair `(a, b)` at index `a·|B| + b`.
    pub fn direct_product(&self, a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let nb = b.order();
        let order = a
            .order()
            .checked_mul(nb)
            .ok_or(Error::Overflow("product order"))?;
        self.ensure(order)?;
        let table = table_from_fn(order, |x, y| {
            a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb)
        });
        let name = format!("product({};{})", a.name(), b.name());
        Ok(FiniteGroup::from_table_unchecked(name, order, table))
    }

    /// Iterated direct product of cyclic factors, left to right.
    pub fn abelian(&self, invariants: &[usize]) -> Result<FiniteGroup> {
        let spec = GroupSpec::Abelian(invariants.to_vec());
        spec.check_domain()?;
        let order = invariants
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or(Error::Overflow("abelian order"))?;
        self.ensure(order)?;
        let mut g = self.cyclic(invariants[0])?;
        for &d in &invariants[1..] {
            g = self.direct_product(&g, &self.cyclic(d)?)?;
        }
        Ok(g.with_name(spec.to_string()))
    }

    /// Dihedral group of order `2m`: `r^i s^j` at index `i + j·m`, `s r s = r⁻¹`.
    pub fn dihedral(&self, m: usize) -> Result<FiniteGroup> {
        GroupSpec::Dihedral(m).check_domain()?;
        let order = 2 * m;
        self.ensure(order)?;
        let table = table_from_fn(order, |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            rot + ((j + l) % 2) * m
        });
        Ok(FiniteGroup::from_table_unchecked(
            GroupSpec::Dihedral(m).to_string(),
            order,
            table,
        ))
    }

    /// Dicyclic group of order `4m`: `a^i b^j` at index `i + j·2m`, with
    /// `a^{2m} = 1`, `b² = a^m`, `b⁻¹ a b = a⁻¹`.
    pub fn dicyclic(&self, m: usize) -> Result<FiniteGroup> {
        GroupSpec::Dicyclic(m).check_domain()?;
        let order = 4 * m;
        self.ensure(order)?;
        let n = 2 * m;
        let table = table_from_fn(order, |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            if j == 0 {
                (i + k) % n + l * n
            } else if l == 0 {
                // a^i b a^k = a^{i-k} b
                (i + n - k) % n + n
            } else {
                // a^i b a^k b = a^{i-k} b² = a^{i-k+m}
                (i + n - k + m) % n
            }
        });
        Ok(FiniteGroup::from_table_unchecked(
            GroupSpec::Dicyclic(m).to_string(),
            order,
            table,
        ))
    }

    pub fn sym(&self, k: usize) -> Result<FiniteGroup> {
        GroupSpec::Sym(k).check_domain()?;
        let perms = lex_permutations(k);
        self.ensure(perms.len())?;
        Ok(cayley_of_permutations(
            GroupSpec::Sym(k).to_string(),
            &perms,
        ))
    }

    pub fn alt(&self, k: usize) -> Result<FiniteGroup> {
        GroupSpec::Alt(k).check_domain()?;
        let perms: Vec<_> = lex_permutations(k)
            .into_iter()
            .filter(|p| is_even(p))
            .collect();
        self.ensure(perms.len())?;
        Ok(cayley_of_permutations(
            GroupSpec::Alt(k).to_string(),
            &perms,
        ))
    }

    /// Upper unitriangular 3×3 matrices over Z/p, as triples `(a, b, c)` with
    /// `(a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b')`.
    pub fn heisenberg(&self, p: usize) -> Result<FiniteGroup> {
        GroupSpec::Heisenberg(p).check_domain()?;
        let order = p
            .checked_pow(3)
            .ok_or(Error::Overflow("heisenberg order"))?;
        self.ensure(order)?;
        let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
        let table = table_from_fn(order, |x, y| {
            let (a, b, c) = split(x);
            let (a2, b2, c2) = split(y);
            ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
        });
        Ok(FiniteGroup::from_table_unchecked(
            GroupSpec::Heisenberg(p).to_string(),
            order,
            table,
        ))
    }

    /// Closes the generators under composition, breadth first. Elements are
    /// numbered in discovery order starting from the identity.
    pub fn from_permutations(
        &self,
        degree: usize,
        generators: &[Vec<usize>],
    ) -> Result<FiniteGroup> {
        for (gi, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter()
                    .all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(Error::Domain(format!(
                    "generator {gi} is not a permutation of 0..{degree}"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let y = compose(&elements[i], g);
                if !index.contains_key(&y) {
                    if elements.len() == self.cap {
                        return Err(Error::ClosureExceeded {
                            cap: self.cap,
                            found: elements.len(),
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let table = table_from_fn(n, |a, b| index[&compose(&elements[a], &elements[b])]);
        Ok(FiniteGroup::from_table_unchecked(
            format!("perm-closure-{degree}"),
            n,
            table,
        ))
    }

    pub fn from_cayley_file(&self, path: &Path) -> Result<FiniteGroup> {
        let text = read(path)?;
        self.parse_cayley(&text, path)
    }

    pub fn from_perm_file(&self, path: &Path) -> Result<FiniteGroup> {
        let text = read(path)?;
        self.parse_perm(&text, path)
    }

    /// Cayley file: first line `n`, then `n` rows of `n` 0-based indices, an
    /// optional `name <label>` line, `#` comments.
    pub fn parse_cayley(&self, text: &str, path: &Path) -> Result<FiniteGroup> {
        let perr = |line: usize, msg: String| Error::Parse {
            path: path.to_path_buf(),
            line,
            msg,
        };
        let mut name = None;
        let mut order = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (line, content) in content_lines(text) {
            if let Some(label) = content.strip_prefix("name ") {
                name = Some(label.trim().to_string());
                continue;
            }
            let nums = parse_numbers(content).map_err(|m| perr(line, m))?;
            match order {
                None => {
                    if nums.len() != 1 || nums[0] == 0 {
                        return Err(perr(
                            line,
                            "first line must be the positive group order".into(),
                        ));
                    }
                    self.ensure(nums[0])?;
                    order = Some(nums[0]);
                }
                Some(n) => {
                    if rows.len() == n {
                        return Err(perr(line, format!("more than {n} table rows")));
                    }
                    if nums.len() != n {
                        return Err(perr(
                            line,
                            format!("expected {n} entries, found {}", nums.len()),
                        ));
                    }
                    rows.push(nums);
                }
            }
        }
        let n = order.ok_or_else(|| perr(0, "missing group order".into()))?;
        if rows.len() != n {
            return Err(perr(
                0,
                format!("expected {n} table rows, found {}", rows.len()),
            ));
        }
        let name = name.unwrap_or_else(|| format!("file:{}", path.display()));
        Ok(FiniteGroup::validate(&rows, name)?)
    }

    /// Permutation file: `degree d`, then one generator per line as `d`
    /// images of `0..d`, an optional `name <label>` line, `#` comments.
    pub fn parse_perm(&self, text: &str, path: &Path) -> Result<FiniteGroup> {
        let perr = |line: usize, msg: String| Error::Parse {
            path: path.to_path_buf(),
            line,
            msg,
        };
        let mut name = None;
        let mut degree = None;
        let mut gens = Vec::new();
        for (line, content) in content_lines(text) {
            if let Some(label) = content.strip_prefix("name ") {
                name = Some(label.trim().to_string());
                continue;
            }
            match degree {
                None => {
                    let d = content
                        .strip_prefix("degree")
                        .and_then(|r| r.trim().parse::<usize>().ok())
                        .filter(|&d| d > 0)
                        .ok_or_else(|| {
                            perr(line, "first line must be 'degree <d>' with d ≥ 1".into())
                        })?;
                    degree = Some(d);
                }
                Some(d) => {
                    let g = parse_numbers(content).map_err(|m| perr(line, m))?;
                    if g.len() != d {
                        return Err(perr(
                            line,
                            format!("expected {d} images, found {}", g.len()),
                        ));
                    }
                    gens.push((line, g));
                }
            }
        }
        let d = degree.ok_or_else(|| perr(0, "missing 'degree' line".into()))?;
        for (line, g) in &gens {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if sorted.iter().enumerate().any(|(i, &x)| i != x) {
                return Err(perr(*line, format!("not a permutation of 0..{d}")));
            }
        }
        let gens: Vec<_> = gens.into_iter().map(|(_, g)| g).collect();
        let g = self.from_permutations(d, &gens)?;
        Ok(g.with_name(name.unwrap_or_else(|| format!("perm:{}", path.display()))))
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_numbers(line: &str) -> Result<Vec<usize>, String> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("'{t}' is not a nonnegative integer"))
        })
        .collect()
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

fn lex_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..k).collect();
    let mut out = vec![p.clone()];
    while let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) {
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
    out
}

fn cayley_of_permutations(name: String, perms: &[Vec<usize>]) -> FiniteGroup {
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let n = perms.len();
    let table = table_from_fn(n, |a, b| index[compose(&perms[a], &perms[b]).as_slice()]);
    FiniteGroup::from_table_unchecked(name, n, table)
}

/// Index of a permutation (one-line notation over `0..k`) within `sym(k)`.
pub fn sym_index(perm: &[usize]) -> Option<usize> {
    lex_permutations(perm.len()).iter().position(|p| p == perm)
}

/// Index of an even permutation within `alt(k)`.
pub fn alt_index(perm: &[usize]) -> Option<usize> {
    lex_permutations(perm.len())
        .into_iter()
        .filter(|p| is_even(p))
        .position(|p| p == perm)
}

/// Factors `n` into `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn prime_check(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::psi;

    fn b() -> Builder {
        Builder::default()
    }

    fn revalidate(g: &FiniteGroup) {
        FiniteGroup::validate(&g.rows(), g.name()).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(b().cyclic(1).unwrap().order(), 1);
        assert_eq!(b().cyclic(6).unwrap().order_of(1), 6);
        assert_eq!(b().cyclic(12).unwrap().order_of(6), 2);
        assert!(matches!(b().cyclic(0), Err(Error::Domain(_))));
        assert!(matches!(
            Builder::new(10).cyclic(11),
            Err(Error::CapExceeded { order: 11, cap: 10 })
        ));
    }

    #[test]
    fn direct_product_examples() {
        let c6 = b()
            .direct_product(&b().cyclic(2).unwrap(), &b().cyclic(3).unwrap())
            .unwrap();
        assert_eq!(c6.order_of(4), 6);
        let v4 = b()
            .direct_product(&b().cyclic(2).unwrap(), &b().cyclic(2).unwrap())
            .unwrap();
        assert!((1..4).all(|a| v4.order_of(a) == 2));
        let d4 = b().dihedral(4).unwrap();
        let d4x1 = b().direct_product(&d4, &b().cyclic(1).unwrap()).unwrap();
        assert_eq!(d4x1.rows(), d4.rows());
        assert!(Builder::new(20).direct_product(&d4, &d4).is_err());
    }

    #[test]
    fn abelian_examples() {
        let g = b().abelian(&[4, 2]).unwrap();
        assert_eq!((g.order(), g.exponent()), (8, 4));
        let e8 = b().abelian(&[2, 2, 2]).unwrap();
        assert_eq!(e8.exponent(), 2);
        assert_eq!(
            b().abelian(&[6]).unwrap().rows(),
            b().cyclic(6).unwrap().rows()
        );
        assert!(b().abelian(&[4, 1]).is_err());
        assert!(b().abelian(&[]).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let d3 = b().dihedral(3).unwrap();
        let s3 = b().sym(3).unwrap();
        assert_eq!(psi(&d3), 13);
        assert_eq!(d3.order_profile(), s3.order_profile());
        assert_eq!(psi(&b().dihedral(4).unwrap()), 19);
        assert_eq!(
            b().dihedral(1).unwrap().rows(),
            b().cyclic(2).unwrap().rows()
        );
    }

    #[test]
    fn dicyclic_examples() {
        let q8 = b().dicyclic(2).unwrap();
        assert_eq!(psi(&q8), 27);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(
            b().dicyclic(1).unwrap().order_profile(),
            b().cyclic(4).unwrap().order_profile()
        );
        // i = a, i^4 = 1, -1 = a^2
        assert_eq!(q8.pow(1, 4).unwrap(), 0);
        assert_eq!(q8.order_of(2), 2);
    }

    #[test]
    fn sym_and_alt_examples() {
        let s3 = b().sym(3).unwrap();
        assert_eq!(psi(&s3), 13);
        // (12)(13) = (132) with points 1..3 written 0-based as 0..2.
        let t12 = sym_index(&[1, 0, 2]).unwrap();
        let t13 = sym_index(&[2, 1, 0]).unwrap();
        let c132 = sym_index(&[2, 0, 1]).unwrap();
        assert_eq!(s3.mul(t12, t13).unwrap(), c132);
        assert_eq!(s3.order_of(t12), 2);
        let a4 = b().alt(4).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.element_orders().iter().all(|&o| o != 6));
        assert_eq!(b().sym(1).unwrap().order(), 1);
        assert_eq!(alt_index(&[1, 2, 0]), Some(1));
    }

    #[test]
    fn heisenberg_examples() {
        let h = b().heisenberg(3).unwrap();
        assert!((1..27).all(|x| h.order_of(x) == 3));
        assert_eq!(psi(&h), 79);
        let center = (0..27)
            .filter(|&z| (0..27).all(|x| h.op(z, x) == h.op(x, z)))
            .count();
        assert_eq!(center, 3);
        assert!(matches!(b().heisenberg(2), Err(Error::Domain(_))));
    }

    #[test]
    fn family_orders_and_validity() {
        for m in 1..=12 {
            let d = b().dihedral(m).unwrap();
            assert_eq!(d.order(), 2 * m);
            revalidate(&d);
            let q = b().dicyclic(m).unwrap();
            assert_eq!(q.order(), 4 * m);
            revalidate(&q);
        }
        for (k, fact) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let s = b().sym(k).unwrap();
            assert_eq!(s.order(), fact);
            revalidate(&s);
            let a = b().alt(k).unwrap();
            assert_eq!(a.order(), (fact / 2).max(1));
            revalidate(&a);
        }
        for p in [3, 5, 7] {
            let h = b().heisenberg(p).unwrap();
            assert_eq!(h.order(), p * p * p);
            revalidate(&h);
        }
        revalidate(&b().abelian(&[4, 2, 3]).unwrap());
        assert!(Builder::new(100).sym(5).is_err());
    }

    #[test]
    fn product_orders_are_lcms() {
        let a = b().dihedral(3).unwrap();
        let c = b().cyclic(4).unwrap();
        let p = b().direct_product(&a, &c).unwrap();
        revalidate(&p);
        for x in 0..p.order() {
            let (i, j) = (x / 4, x % 4);
            assert_eq!(
                p.order_of(x),
                crate::group::lcm(a.order_of(i), c.order_of(j))
            );
        }
    }

    #[test]
    fn permutation_closure_examples() {
        let s3 = b()
            .from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
            .unwrap();
        assert_eq!((s3.order(), psi(&s3)), (6, 13));
        let c5 = b().from_permutations(5, &[vec![1, 2, 3, 4, 0]]).unwrap();
        assert!(c5.is_cyclic() && c5.order() == 5);
        let v4 = b()
            .from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
            .unwrap();
        assert_eq!(v4.order_profile(), vec![1, 2, 2, 2]);
        revalidate(&v4);
        assert!(b().from_permutations(3, &[vec![0, 0, 1]]).is_err());
        assert!(matches!(
            Builder::new(10).from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
            Err(Error::ClosureExceeded { cap: 10, found: 10 })
        ));
        assert_eq!(b().from_permutations(3, &[]).unwrap().order(), 1);
    }

    #[test]
    fn closure_is_generator_order_independent() {
        let gens = vec![
            vec![1, 0, 2, 3, 4],
            vec![0, 2, 3, 4, 1],
            vec![1, 0, 3, 2, 4],
        ];
        let g1 = b().from_permutations(5, &gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let g2 = b().from_permutations(5, &rev).unwrap();
        assert_eq!(g1.order(), 120);
        assert_eq!(g1.order_profile(), g2.order_profile());
    }

    #[test]
    fn cayley_text() {
        let g = b()
            .parse_cayley("3\n0 1 2\n1 2 0\n2 0 1\n", Path::new("c3"))
            .unwrap();
        assert!(g.is_cyclic() && g.order() == 3);
        let named = b()
            .parse_cayley("# C2\n2\n0 1 # row\n1 0\nname two\n", Path::new("x"))
            .unwrap();
        assert_eq!(named.name(), "two");
        let bad = b().parse_cayley("3\n0 1 2\n1 2 0\n2 0 0\n", Path::new("x"));
        assert!(matches!(bad, Err(Error::Validation(_))));
        let short = b().parse_cayley("3\n0 1 2\n1 2\n2 0 1\n", Path::new("x"));
        assert!(matches!(short, Err(Error::Parse { line: 3, .. })));
        assert!(matches!(
            b().parse_cayley("2\n0 x\n1 0", Path::new("x")),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn perm_text() {
        let g = b()
            .parse_perm("degree 3\n1 0 2\n1 2 0\nname S3\n", Path::new("s3"))
            .unwrap();
        assert_eq!((g.order(), g.name()), (6, "S3"));
        assert!(matches!(
            b().parse_perm("degree 3\n0 0 1\n", Path::new("x")),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            b().parse_perm("3\n0 1 2\n", Path::new("x")),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
