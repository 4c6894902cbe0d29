use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{multiplicativity_checks, Analysis, VerificationReport};
use crate::constructors::{factorize, Builder};
use crate::error::{Error, Result};
use crate::group::gcd;
use crate::group_spec::{is_prime, GroupSpec};

/// A catalog family selectable with `--family`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Dicyclic,
    Sym,
    Alt,
    Heisenberg,
    Product,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Cyclic,
        Family::Abelian,
        Family::Dihedral,
        Family::Dicyclic,
        Family::Sym,
        Family::Alt,
        Family::Heisenberg,
        Family::Product,
    ];

    /// Parses a comma-separated list; `all` selects every family.
    pub fn parse_list(text: &str) -> Result<Vec<Family>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "all" {
                out.extend(Family::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "abelian" => Family::Abelian,
            "dihedral" => Family::Dihedral,
            "dicyclic" => Family::Dicyclic,
            "sym" => Family::Sym,
            "alt" => Family::Alt,
            "heisenberg" => Family::Heisenberg,
            "product" => Family::Product,
            other => return Err(Error::Domain(format!("unknown group family '{other}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// Cyclic-group bound over every subgroup of each nilpotent group.
    Theorem,
    /// The same bound over every subgroup of each non-nilpotent group.
    Conjecture,
    /// Normal identity and the intermediate, normal-quotient and global bounds.
    Lemmas,
    /// Coprime product identity over catalog pairs.
    Multiplicativity,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Theorem,
        Suite::Conjecture,
        Suite::Lemmas,
        Suite::Multiplicativity,
    ];

    pub fn label(suites: &[Suite]) -> String {
        suites
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Theorem => "theorem",
            Suite::Conjecture => "conjecture",
            Suite::Lemmas => "lemmas",
            Suite::Multiplicativity => "multiplicativity",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem" => Suite::Theorem,
            "conjecture" => Suite::Conjecture,
            "lemmas" => Suite::Lemmas,
            "multiplicativity" => Suite::Multiplicativity,
            other => return Err(Error::Domain(format!("unknown suite '{other}'"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub max_order: usize,
    pub suites: Vec<Suite>,
    /// Worker threads; 0 lets the pool pick.
    pub jobs: usize,
    pub cap: usize,
}

impl ScanOptions {
    pub fn new(max_order: usize, suites: &[Suite]) -> Self {
        Self {
            max_order,
            suites: suites.to_vec(),
            jobs: 0,
            cap: crate::DEFAULT_CAP,
        }
    }
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order `n` as its list of prime-power invariants
/// (primes ascending, exponents descending).
pub(crate) fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut types = vec![vec![]];
    for (p, e) in factorize(n as u64) {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(e, e) {
                let mut t = t.clone();
                t.extend(part.iter().map(|&k| (p as usize).pow(k)));
                next.push(t);
            }
        }
        types = next;
    }
    types
}

fn abelian_spec(invariants: Vec<usize>) -> GroupSpec {
    if invariants.is_empty() {
        GroupSpec::Cyclic(1)
    } else {
        GroupSpec::Abelian(invariants)
    }
}

fn spec_order(spec: &GroupSpec) -> usize {
    match spec {
        GroupSpec::Cyclic(n) => *n,
        GroupSpec::Abelian(v) => v.iter().product(),
        GroupSpec::Dihedral(m) => 2 * m,
        GroupSpec::Dicyclic(m) => 4 * m,
        GroupSpec::Sym(k) => (1..=*k).product(),
        GroupSpec::Alt(k) => ((1..=*k).product::<usize>() / 2).max(1),
        GroupSpec::Heisenberg(p) => p * p * p,
        GroupSpec::Product(a, b) => spec_order(a) * spec_order(b),
        GroupSpec::CayleyFile(_) | GroupSpec::PermFile(_) => 0,
    }
}

/// The default product list: each non-nilpotent base times every cyclic
/// group of coprime order, and each non-abelian p-group times every abelian
/// group of coprime order.
fn default_products(max_order: usize) -> Vec<GroupSpec> {
    let mut non_nilpotent = vec![
        GroupSpec::Sym(3),
        GroupSpec::Sym(4),
        GroupSpec::Sym(5),
        GroupSpec::Alt(4),
        GroupSpec::Alt(5),
    ];
    let mut p_groups = Vec::new();
    for m in 3..=max_order / 2 {
        if m.is_power_of_two() {
            p_groups.push(GroupSpec::Dihedral(m));
        } else {
            non_nilpotent.push(GroupSpec::Dihedral(m));
        }
    }
    for m in 2..=max_order / 4 {
        if m.is_power_of_two() {
            p_groups.push(GroupSpec::Dicyclic(m));
        } else {
            non_nilpotent.push(GroupSpec::Dicyclic(m));
        }
    }
    p_groups.extend(
        (3..)
            .filter(|&p| is_prime(p as u64))
            .take_while(|p| p * p * p <= max_order)
            .map(GroupSpec::Heisenberg),
    );

    let mut out = Vec::new();
    for base in non_nilpotent {
        let n = spec_order(&base);
        for c in (2..=max_order / n).filter(|&c| gcd(n, c) == 1) {
            out.push(GroupSpec::product(base.clone(), GroupSpec::Cyclic(c)));
        }
    }
    for base in p_groups {
        let n = spec_order(&base);
        for c in (2..=max_order / n).filter(|&c| gcd(n, c) == 1) {
            for t in abelian_types(c) {
                out.push(GroupSpec::product(base.clone(), abelian_spec(t)));
            }
        }
    }
    out
}

/// Catalog group specs of order at most `max_order` from the chosen
/// families, deduplicated and sorted by name.
pub fn catalog(families: &[Family], max_order: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for f in families {
        match f {
            Family::Cyclic => out.extend((1..=max_order).map(GroupSpec::Cyclic)),
            Family::Abelian => {
                for n in 1..=max_order {
                    out.extend(abelian_types(n).into_iter().map(abelian_spec));
                }
            }
            Family::Dihedral => out.extend((1..=max_order / 2).map(GroupSpec::Dihedral)),
            Family::Dicyclic => out.extend((1..=max_order / 4).map(GroupSpec::Dicyclic)),
            Family::Sym => out.extend((3..=5).map(GroupSpec::Sym)),
            Family::Alt => out.extend((3..=5).map(GroupSpec::Alt)),
            Family::Heisenberg => out.extend(
                (3..)
                    .filter(|&p| is_prime(p as u64))
                    .take_while(|p| p * p * p <= max_order)
                    .map(GroupSpec::Heisenberg),
            ),
            Family::Product => out.extend(default_products(max_order)),
        }
    }
    out.retain(|s| spec_order(s) <= max_order);
    let mut keyed: Vec<(String, GroupSpec)> = out.into_iter().map(|s| (s.to_string(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// Builds and analyses every catalog group, runs the chosen suites, and
/// merges the per-group reports in name order.
pub fn scan_catalog(families: &[Family], opts: &ScanOptions) -> Result<VerificationReport> {
    if opts.max_order > opts.cap {
        return Err(Error::CapExceeded {
            order: opts.max_order,
            cap: opts.cap,
        });
    }
    scan_specs(&catalog(families, opts.max_order), opts)
}

/// Runs the chosen suites over explicit group specs.
pub fn scan_specs(specs: &[GroupSpec], opts: &ScanOptions) -> Result<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    let builder = Builder::new(opts.cap);
    let suites = &opts.suites;
    pool.install(|| {
        let analyses: Vec<Analysis> = specs
            .par_iter()
            .map(|s| builder.build(s).map(Analysis::new))
            .collect::<Result<_>>()?;

        let mut parts: Vec<(String, VerificationReport)> = analyses
            .par_iter()
            .map(|a| -> Result<_> {
                let mut r = VerificationReport::new("");
                if suites.contains(&Suite::Theorem) && a.nilpotent {
                    r.absorb(a.theorem()?);
                }
                if suites.contains(&Suite::Conjecture) && !a.nilpotent {
                    r.absorb(a.sweep("conjecture")?);
                }
                if suites.contains(&Suite::Lemmas) {
                    r.absorb(a.lemma_bounds()?);
                }
                r.groups_checked = usize::from(r.pairs_checked > 0);
                Ok((a.group.name().to_string(), r))
            })
            .collect::<Result<_>>()?;

        if suites.contains(&Suite::Multiplicativity) {
            let pairs: Vec<(usize, usize)> = (0..analyses.len())
                .flat_map(|i| (i + 1..analyses.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| {
                    let (n1, n2) = (analyses[i].group.order(), analyses[j].group.order());
                    n1 > 1 && n2 > 1 && gcd(n1, n2) == 1 && n1 * n2 <= opts.max_order
                })
                .collect();
            let checks: Vec<(String, VerificationReport)> = pairs
                .par_iter()
                .map(|&(i, j)| {
                    let r = multiplicativity_checks(&analyses[i], &analyses[j])?;
                    let id = r
                        .checks
                        .first()
                        .map(|c| c.group_id.clone())
                        .unwrap_or_default();
                    Ok((id, r))
                })
                .collect::<Result<_>>()?;
            parts.extend(checks);
        }
        parts.retain(|(_, r)| r.pairs_checked > 0);
        Ok(VerificationReport::merge(Suite::label(suites), parts))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts_follow_partitions() {
        let counts: Vec<usize> = (1..=16).map(|n| abelian_types(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(
            abelian_types(72),
            vec![
                vec![8, 9],
                vec![8, 3, 3],
                vec![4, 2, 9],
                vec![4, 2, 3, 3],
                vec![2, 2, 2, 9],
                vec![2, 2, 2, 3, 3]
            ]
        );
        assert_eq!(abelian_types(128).len(), 15);
    }

    #[test]
    fn catalog_contents() {
        assert!(catalog(&[], 64).is_empty());
        let sa = catalog(&[Family::Sym, Family::Alt], 60);
        let names: Vec<_> = sa.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["alt:3", "alt:4", "alt:5", "sym:3", "sym:4"]);
        let prods = catalog(&[Family::Product], 60);
        assert!(prods.contains(&GroupSpec::product(GroupSpec::Sym(3), GroupSpec::Cyclic(5))));
        assert!(prods.contains(&GroupSpec::product(GroupSpec::Alt(4), GroupSpec::Cyclic(5))));
        assert!(prods.contains(&GroupSpec::product(
            GroupSpec::Dicyclic(2),
            GroupSpec::Abelian(vec![5])
        )));
        assert!(prods.iter().all(|s| spec_order(s) <= 60));
        assert_eq!(
            catalog(&[Family::Heisenberg], 200),
            vec![GroupSpec::Heisenberg(3), GroupSpec::Heisenberg(5)]
        );
    }

    #[test]
    fn family_and_suite_parsing() {
        assert_eq!(
            Family::parse_list("sym, alt").unwrap(),
            vec![Family::Sym, Family::Alt]
        );
        assert_eq!(Family::parse_list("all").unwrap().len(), 8);
        assert!(Family::parse_list("sym,quux").is_err());
        assert_eq!("lemmas".parse::<Suite>().unwrap(), Suite::Lemmas);
        assert_eq!(
            Suite::label(&[Suite::Theorem, Suite::Conjecture]),
            "theorem+conjecture"
        );
    }

    #[test]
    fn empty_scan() {
        let r = scan_catalog(&[], &ScanOptions::new(64, &Suite::ALL)).unwrap();
        assert_eq!((r.groups_checked, r.pairs_checked, r.violations), (0, 0, 0));
    }

    #[test]
    fn abelian_scan_order_16() {
        let r = scan_catalog(&[Family::Abelian], &ScanOptions::new(16, &[Suite::Theorem])).unwrap();
        assert_eq!(
            r.groups_checked,
            (1..=16).map(|n| abelian_types(n).len()).sum::<usize>()
        );
        assert_eq!(r.violations, 0);
        let order16: std::collections::BTreeSet<_> = r
            .records
            .iter()
            .filter(|x| x.group_order == 16)
            .map(|x| x.group_id.clone())
            .collect();
        assert_eq!(order16.len(), 5);
    }

    #[test]
    fn scan_is_deterministic_across_worker_counts() {
        let fams = [Family::Dihedral, Family::Dicyclic, Family::Sym];
        let mut one = ScanOptions::new(24, &Suite::ALL);
        one.jobs = 1;
        let mut four = one.clone();
        four.jobs = 4;
        let a = scan_catalog(&fams, &one).unwrap();
        let b = scan_catalog(&fams, &four).unwrap();
        assert_eq!(a, b);
        let (mut ja, mut jb) = (Vec::new(), Vec::new());
        a.write_jsonl(&mut ja).unwrap();
        b.write_jsonl(&mut jb).unwrap();
        assert_eq!(ja, jb);
        let ids: Vec<_> = a.records.iter().map(|r| r.group_id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn cap_is_enforced() {
        let mut o = ScanOptions::new(600, &[Suite::Theorem]);
        o.cap = 512;
        assert!(matches!(
            scan_catalog(&[Family::Cyclic], &o),
            Err(Error::CapExceeded { .. })
        ));
    }
}
