//! Textual group descriptions such as `dihedral:4` or
//! `product(cyclic:3;dicyclic:2)`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
    Dicyclic(usize),
    Sym(usize),
    Alt(usize),
    Heisenberg(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    CayleyFile(PathBuf),
    PermFile(PathBuf),
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    /// Family name as used in the text grammar and `--family` lists.
    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Abelian(_) => "abelian",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Dicyclic(_) => "dicyclic",
            GroupSpec::Sym(_) => "sym",
            GroupSpec::Alt(_) => "alt",
            GroupSpec::Heisenberg(_) => "heisenberg",
            GroupSpec::Product(..) => "product",
            GroupSpec::CayleyFile(_) => "file",
            GroupSpec::PermFile(_) => "perm",
        }
    }

    /// Checks the family's parameter domain (not the order cap).
    pub fn check_domain(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        match self {
            GroupSpec::Cyclic(0) => bad("cyclic order must be at least 1".into()),
            GroupSpec::Dihedral(0) => bad("dihedral parameter must be at least 1".into()),
            GroupSpec::Dicyclic(0) => bad("dicyclic parameter must be at least 1".into()),
            GroupSpec::Sym(k) | GroupSpec::Alt(k) if !(1..=5).contains(k) => bad(format!(
                "{} degree must be in 1..=5, got {k}",
                self.family()
            )),
            GroupSpec::Heisenberg(p) if *p == 2 || !is_prime(*p as u64) => bad(format!(
                "heisenberg parameter must be an odd prime, got {p}"
            )),
            GroupSpec::Abelian(inv) if inv.is_empty() => {
                bad("abelian needs at least one invariant".into())
            }
            GroupSpec::Abelian(inv) if inv.iter().any(|&d| d < 2) => {
                bad("abelian invariants must all be at least 2".into())
            }
            GroupSpec::Product(a, b) => {
                a.check_domain()?;
                b.check_domain()
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(inv) => {
                let parts: Vec<_> = inv.iter().map(|d| d.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Dicyclic(n)
            | GroupSpec::Sym(n)
            | GroupSpec::Alt(n)
            | GroupSpec::Heisenberg(n) => write!(f, "{}:{n}", self.family()),
            GroupSpec::Product(a, b) => write!(f, "product({a};{b})"),
            GroupSpec::CayleyFile(p) | GroupSpec::PermFile(p) => {
                write!(f, "{}:{}", self.family(), p.display())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec(false)?;
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        spec.check_domain()?;
        Ok(spec)
    }
}

/// Parses the `--group`/positional spec grammar.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{tok}'")))
        }
    }

    fn ident(&mut self) -> &str {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        let start = self.pos;
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "number too large".into(),
            })
    }

    fn path(&mut self, nested: bool) -> Result<PathBuf> {
        let len = if nested {
            self.rest().find([';', ')']).unwrap_or(self.rest().len())
        } else {
            self.rest().len()
        };
        if len == 0 {
            return Err(self.err("expected a file path"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(PathBuf::from(&self.src[start..self.pos]))
    }

    fn spec(&mut self, nested: bool) -> Result<GroupSpec> {
        let start = self.pos;
        let family = self.ident().to_string();
        if family == "product" {
            self.expect("(")?;
            let a = self.spec(true)?;
            self.expect(";")?;
            let b = self.spec(true)?;
            self.expect(")")?;
            return Ok(GroupSpec::product(a, b));
        }
        self.expect(":")?;
        Ok(match family.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.number()?),
            "dihedral" => GroupSpec::Dihedral(self.number()?),
            "dicyclic" => GroupSpec::Dicyclic(self.number()?),
            "sym" => GroupSpec::Sym(self.number()?),
            "alt" => GroupSpec::Alt(self.number()?),
            "heisenberg" => GroupSpec::Heisenberg(self.number()?),
            "abelian" => {
                let mut inv = vec![self.number()?];
                while self.eat(",") {
                    inv.push(self.number()?);
                }
                GroupSpec::Abelian(inv)
            }
            "file" => GroupSpec::CayleyFile(self.path(nested)?),
            "perm" => GroupSpec::PermFile(self.path(nested)?),
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unknown group family '{family}'"),
                });
            }
        })
    }
}
