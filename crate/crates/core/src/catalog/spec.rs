//! The textual group-spec grammar:
//!
//! ```text
//! spec := base (":" ext)*
//! base := Sym(n) | Alt(n) | Cyc(n) | Dih(n) | SL(n,q) | PSL(n,q) | PGL(n,q)
//!       | Sp(n,q) | PSigmaL(n,q) | PGammaL(n,q) | Perm[cycles, ...]
//! ext  := frob(k) | graph | sub(name)
//! ```
//!
//! Points inside `Perm[...]` are 1-based and may be separated by spaces or
//! commas, e.g. `Perm[(1 2 3)(4 5),(1,2)]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixFamily {
    SL,
    PSL,
    PGL,
    Sp,
    PSigmaL,
    PGammaL,
}

impl MatrixFamily {
    fn name(self) -> &'static str {
        match self {
            MatrixFamily::SL => "SL",
            MatrixFamily::PSL => "PSL",
            MatrixFamily::PGL => "PGL",
            MatrixFamily::Sp => "Sp",
            MatrixFamily::PSigmaL => "PSigmaL",
            MatrixFamily::PGammaL => "PGammaL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    Dih(usize),
    Matrix { family: MatrixFamily, n: usize, q: u64 },
    /// Generators as lists of 1-based cycles.
    Perm(Vec<Vec<Vec<usize>>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ext {
    Frob(u32),
    Graph,
    Sub(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub base: Base,
    pub exts: Vec<Ext>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let spec = p.spec()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }

    /// The canonical printed form; parsing it gives back `self`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }

    pub fn has_graph(&self) -> bool {
        self.exts.contains(&Ext::Graph)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Sym(n) => write!(f, "Sym({n})")?,
            Base::Alt(n) => write!(f, "Alt({n})")?,
            Base::Cyc(n) => write!(f, "Cyc({n})")?,
            Base::Dih(n) => write!(f, "Dih({n})")?,
            Base::Matrix { family, n, q } => write!(f, "{}({n},{q})", family.name())?,
            Base::Perm(gens) => {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            return "()".to_string();
                        }
                        cycles
                            .iter()
                            .map(|c| {
                                let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                                format!("({})", pts.join(" "))
                            })
                            .collect()
                    })
                    .collect();
                write!(f, "Perm[{}]", parts.join(","))?
            }
        }
        for e in &self.exts {
            match e {
                Ext::Frob(k) => write!(f, ":frob({k})")?,
                Ext::Graph => write!(f, ":graph")?,
                Ext::Sub(name) => write!(f, ":sub({name})")?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "expected a number".into() })
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let base = self.base()?;
        let mut exts = Vec::new();
        while self.eat(b':') {
            let start = self.pos;
            let name = self.ident();
            let ext = match name.as_str() {
                "frob" => {
                    self.expect(b'(')?;
                    let k = self.number()? as u32;
                    self.expect(b')')?;
                    Ext::Frob(k)
                }
                "graph" => Ext::Graph,
                "sub" => {
                    self.expect(b'(')?;
                    let n = self.ident();
                    if n.is_empty() {
                        return Err(self.err("expected a subgroup name"));
                    }
                    self.expect(b')')?;
                    Ext::Sub(n)
                }
                _ => return Err(Error::Parse { pos: start, msg: format!("unknown extension '{name}'") }),
            };
            exts.push(ext);
        }
        Ok(GroupSpec { base, exts })
    }

    fn base(&mut self) -> Result<Base> {
        let start = self.pos;
        let name = self.ident();
        if name == "Perm" {
            return self.perm();
        }
        self.expect(b'(')?;
        let a = self.number()? as usize;
        let one = |b: Base, me: &mut Self| -> Result<Base> {
            me.expect(b')')?;
            Ok(b)
        };
        let family = match name.as_str() {
            "Sym" => return one(Base::Sym(a), self),
            "Alt" => return one(Base::Alt(a), self),
            "Cyc" => return one(Base::Cyc(a), self),
            "Dih" => return one(Base::Dih(a), self),
            "SL" => MatrixFamily::SL,
            "PSL" => MatrixFamily::PSL,
            "PGL" => MatrixFamily::PGL,
            "Sp" => MatrixFamily::Sp,
            "PSigmaL" => MatrixFamily::PSigmaL,
            "PGammaL" => MatrixFamily::PGammaL,
            _ => return Err(Error::Parse { pos: start, msg: format!("unknown constructor '{name}'") }),
        };
        self.expect(b',')?;
        let q = self.number()?;
        self.expect(b')')?;
        Ok(Base::Matrix { family, n: a, q })
    }

    fn perm(&mut self) -> Result<Base> {
        self.expect(b'[')?;
        let mut gens = Vec::new();
        loop {
            let mut cycles = Vec::new();
            self.ws();
            if self.s.get(self.pos) != Some(&b'(') {
                return Err(self.err("expected a cycle"));
            }
            while self.eat(b'(') {
                let mut cycle = Vec::new();
                if !self.eat(b')') {
                    loop {
                        let x = self.number()? as usize;
                        if x == 0 {
                            return Err(self.err("points are 1-based"));
                        }
                        cycle.push(x);
                        if self.eat(b')') {
                            break;
                        }
                        self.eat(b',');
                    }
                }
                if cycle.len() > 1 {
                    cycles.push(cycle);
                }
            }
            gens.push(cycles);
            if self.eat(b']') {
                break;
            }
            self.expect(b',')?;
        }
        Ok(Base::Perm(gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let s = GroupSpec::parse("PSL(3,4):frob(1):graph").unwrap();
        assert_eq!(s.base, Base::Matrix { family: MatrixFamily::PSL, n: 3, q: 4 });
        assert_eq!(s.exts, vec![Ext::Frob(1), Ext::Graph]);
        let s = GroupSpec::parse("PGammaL(2,9):sub(M10)").unwrap();
        assert_eq!(s.exts, vec![Ext::Sub("M10".into())]);
        let s = GroupSpec::parse(" Perm[(1,2,3)(4 5), (1 2)] ").unwrap();
        assert_eq!(s.base, Base::Perm(vec![vec![vec![1, 2, 3], vec![4, 5]], vec![vec![1, 2]]]));
        assert_eq!(s.to_string(), "Perm[(1 2 3)(4 5),(1 2)]");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["Foo(3)", "Sym(3", "PSL(2)", "Sym(3):bar", "Perm[]", "Perm[(0 1)]", "Sym(3) x"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad}");
        }
    }

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        let base = prop_oneof![
            (1usize..20).prop_map(Base::Sym),
            (1usize..20).prop_map(Base::Alt),
            (1usize..20).prop_map(Base::Dih),
            (1usize..20).prop_map(Base::Cyc),
            (2usize..5, 2u64..82).prop_map(|(n, q)| Base::Matrix { family: MatrixFamily::PGammaL, n, q }),
            (2usize..5, 2u64..82).prop_map(|(n, q)| Base::Matrix { family: MatrixFamily::Sp, n, q }),
            prop::collection::vec(prop::collection::vec(prop::collection::vec(1usize..30, 2..5), 0..3), 1..4)
                .prop_map(Base::Perm),
        ];
        let ext = prop_oneof![
            (1u32..5).prop_map(Ext::Frob),
            Just(Ext::Graph),
            "[A-Za-z][A-Za-z0-9]{0,5}".prop_map(Ext::Sub),
        ];
        (base, prop::collection::vec(ext, 0..3)).prop_map(|(base, exts)| GroupSpec { base, exts })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(spec in arb_spec()) {
            let printed = spec.to_string();
            prop_assert_eq!(GroupSpec::parse(&printed).unwrap(), spec);
        }
    }
}
