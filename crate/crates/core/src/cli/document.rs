//! Problem files: UTF-8 JSON with integer vectors and rationals written as `"p/q"` strings.

use crate::divisors::{MonomialIdeal, TWeilDivisor};
use crate::error::{Error, Result};
use crate::mult::{PairSpec, Term, TermBody};
use crate::ratgeom::rational::{fmt_rat, parse_rat};
use crate::toric::AffineToricVariety;
use crate::Rat;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map(RatStr).ok_or_else(|| de::Error::custom(format!("malformed rational {s:?}")))
    }
}

/// A JSON object whose keys must be distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueMap<T>(pub BTreeMap<String, T>);

impl<T> Default for UniqueMap<T> {
    fn default() -> Self {
        UniqueMap(BTreeMap::new())
    }
}

impl<T: Serialize> Serialize for UniqueMap<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for UniqueMap<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = UniqueMap<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with distinct keys")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some(k) = a.next_key::<String>()? {
                    if out.contains_key(&k) {
                        return Err(de::Error::custom(format!("duplicate name {k:?}")));
                    }
                    let v = a.next_value()?;
                    out.insert(k, v);
                }
                Ok(UniqueMap(out))
            }
        }
        d.deserialize_map(V(PhantomData))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: RatStr,
    pub body: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub lattice_rank: usize,
    pub cone_rays: Vec<Vec<i64>>,
    #[serde(default)]
    pub divisors: UniqueMap<Vec<RatStr>>,
    #[serde(default)]
    pub ideals: UniqueMap<Vec<Vec<i64>>>,
    #[serde(default)]
    pub pairs: UniqueMap<Vec<TermDoc>>,
    #[serde(default)]
    pub boundaries: UniqueMap<Vec<RatStr>>,
}

/// A JSON syntax or schema error, located in the source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

fn locate(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
            (line, column)
        }
        None => (1, 1),
    }
}

impl ProblemDocument {
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| ParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })?;
        doc.validate().map_err(|(needle, message)| {
            let (line, column) = locate(text, &needle);
            ParseError { line, column, message }
        })?;
        Ok(doc)
    }

    /// Structural invariants; on failure returns a text fragment to locate and a message.
    fn validate(&self) -> std::result::Result<(), (String, String)> {
        let d = self.lattice_rank;
        let bad_len = |name: &str, what: &str, len: usize, want: usize| {
            (format!("\"{name}\""), format!("{what} {name:?} has length {len}, expected {want}"))
        };
        for r in &self.cone_rays {
            if r.len() != d {
                return Err(("\"cone_rays\"".into(), format!("ray {r:?} has length {}, expected {d}", r.len())));
            }
        }
        let n = self.cone_rays.len();
        if let Some(k) = self.divisors.0.keys().find(|k| self.ideals.0.contains_key(*k)) {
            return Err((format!("\"{k}\""), format!("name {k:?} used for both a divisor and an ideal")));
        }
        for (k, v) in self.divisors.0.iter().chain(&self.boundaries.0) {
            if v.len() != n {
                return Err(bad_len(k, "coefficient array", v.len(), n));
            }
        }
        for (k, gens) in &self.ideals.0 {
            if gens.is_empty() {
                return Err((format!("\"{k}\""), format!("ideal {k:?} has no generators")));
            }
            if let Some(g) = gens.iter().find(|g| g.len() != d) {
                return Err(bad_len(k, "exponent vector in", g.len(), d));
            }
        }
        for (k, terms) in &self.pairs.0 {
            for t in terms {
                if !self.divisors.0.contains_key(&t.body) && !self.ideals.0.contains_key(&t.body) {
                    return Err((format!("\"{k}\""), format!("pair {k:?} refers to undefined body {:?}", t.body)));
                }
                if t.coeff.0 < Rat::from_integer(0.into()) {
                    return Err((format!("\"{k}\""), format!("pair {k:?} has a negative coefficient")));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn build(&self) -> Result<Problem> {
        let x = AffineToricVariety::new(self.cone_rays.clone())?;
        let divisors = self
            .divisors
            .0
            .iter()
            .map(|(k, v)| Ok((k.clone(), TWeilDivisor::on(&x, v.iter().map(|r| r.0.clone()).collect())?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let ideals = self
            .ideals
            .0
            .iter()
            .map(|(k, g)| Ok((k.clone(), MonomialIdeal::new(&x, g.clone())?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let boundaries = self
            .boundaries
            .0
            .iter()
            .map(|(k, v)| Ok((k.clone(), TWeilDivisor::on(&x, v.iter().map(|r| r.0.clone()).collect())?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let mut pairs = BTreeMap::new();
        for (k, terms) in &self.pairs.0 {
            let ts = terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.0.clone(),
                    body: match ideals.get(&t.body) {
                        Some(i) => TermBody::Ideal(i.clone()),
                        None => TermBody::Divisor(divisors[&t.body].clone()),
                    },
                })
                .collect();
            pairs.insert(k.clone(), PairSpec::new(&x, ts)?);
        }
        Ok(Problem { x, divisors, ideals, pairs, boundaries })
    }
}

/// A validated problem with every named object constructed on `X`.
#[derive(Clone, Debug)]
pub struct Problem {
    pub x: AffineToricVariety,
    pub divisors: BTreeMap<String, TWeilDivisor>,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub pairs: BTreeMap<String, PairSpec>,
    pub boundaries: BTreeMap<String, TWeilDivisor>,
}

impl Problem {
    fn missing(kind: &str, name: &str) -> Error {
        Error::Invalid(format!("no {kind} named {name:?}"))
    }

    pub fn divisor(&self, name: &str) -> Result<&TWeilDivisor> {
        self.divisors.get(name).ok_or_else(|| Self::missing("divisor", name))
    }

    pub fn ideal(&self, name: &str) -> Result<&MonomialIdeal> {
        self.ideals.get(name).ok_or_else(|| Self::missing("ideal", name))
    }

    /// `trivial` names the pair `Z = 0` unless the document defines it.
    pub fn pair(&self, name: &str) -> Result<PairSpec> {
        match self.pairs.get(name) {
            Some(p) => Ok(p.clone()),
            None if name == "trivial" => Ok(PairSpec::trivial(&self.x)),
            None => Err(Self::missing("pair", name)),
        }
    }

    pub fn boundary(&self, name: &str) -> Result<&TWeilDivisor> {
        self.boundaries.get(name).ok_or_else(|| Self::missing("boundary", name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_and_locations() {
        let text = "{\n  \"lattice_rank\": 2,\n  \"cone_rays\": [[1,0],[0,1]],\n  \"ideals\": {\"a\": [[1,0]], \"a\": [[0,1]]}\n}";
        let e = ProblemDocument::parse(text).unwrap_err();
        assert!(e.message.contains("duplicate"), "{e}");
        assert_eq!(e.line, 4);
        let text = "{\"lattice_rank\": 2, \"cone_rays\": [[1,0],[0,1]], \"divisors\": {\"D\": [\"1/0\", \"1\"]}}";
        assert!(ProblemDocument::parse(text).unwrap_err().message.contains("malformed rational"));
        let text = "{\"lattice_rank\": 2, \"cone_rays\": [[1,0],[0,1]], \"pairs\": {\"p\": [{\"coeff\": \"1\", \"body\": \"q\"}]}}";
        assert!(ProblemDocument::parse(text).unwrap_err().message.contains("undefined"));
    }
}
