//! Defining relations of the Hecke algebras, as formal expressions that can be
//! evaluated in any model (the algebra itself, or matrices of a representation).

use std::fmt;

use num_traits::{One, Zero};

use crate::domains::{CdTag, Family};
use crate::rootsys::RootSystemData;
use crate::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(usize),
    /// `T_{i,a}`.
    T(usize, usize),
}

/// Product of generators, leftmost factor first; empty means 1.
pub type Monomial = Vec<Gen>;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Expr {
    pub terms: Vec<(LaurentPoly, Monomial)>,
}

impl Expr {
    pub fn zero() -> Self {
        Expr { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Expr { terms: vec![(LaurentPoly::one(), Vec::new())] }
    }

    pub fn mono(m: Monomial) -> Self {
        Expr { terms: vec![(LaurentPoly::one(), m)] }
    }

    pub fn term(c: LaurentPoly, m: Monomial) -> Self {
        Expr { terms: vec![(c, m)] }
    }

    pub fn plus(mut self, c: LaurentPoly, m: Monomial) -> Self {
        self.terms.push((c, m));
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Idempotent,
    Support,
    UnitSum,
    Orthogonal,
    Quadratic,
    OddInverse,
    /// Braid relation of the given length, from the Coxeter entries.
    Braid(u32),
    /// Braid relation from the explicit family presentation.
    FamilyBraid(u32),
}

impl RelationKind {
    pub fn name(&self) -> String {
        match self {
            RelationKind::Idempotent => "idempotent".into(),
            RelationKind::Support => "support".into(),
            RelationKind::UnitSum => "unit-sum".into(),
            RelationKind::Orthogonal => "orthogonal".into(),
            RelationKind::Quadratic => "quadratic".into(),
            RelationKind::OddInverse => "odd-inverse".into(),
            RelationKind::Braid(m) => format!("braid-{}", m),
            RelationKind::FamilyBraid(m) => format!("family-braid-{}", m),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub kind: RelationKind,
    pub instance: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.kind.name(), self.instance)
    }
}

/// Where relations get evaluated.
pub trait RelationModel {
    type Value;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    /// `g * x`.
    fn left_gen(&self, g: Gen, x: &Self::Value) -> Self::Value;
    /// `acc += c * x`.
    fn add_scaled(&self, acc: &mut Self::Value, c: &LaurentPoly, x: &Self::Value);
    fn equal(&self, x: &Self::Value, y: &Self::Value) -> bool;
}

pub fn eval_expr<M: RelationModel>(model: &M, e: &Expr) -> M::Value {
    let mut acc = model.zero();
    for (c, mono) in &e.terms {
        let mut v = model.one();
        for g in mono.iter().rev() {
            v = model.left_gen(*g, &v);
        }
        model.add_scaled(&mut acc, c, &v);
    }
    acc
}

pub fn relation_holds<M: RelationModel>(model: &M, r: &Relation) -> bool {
    model.equal(&eval_expr(model, &r.lhs), &eval_expr(model, &r.rhs))
}

/// The relations that fail in `model`.
pub fn failing<'r, M: RelationModel + Sync>(model: &M, rels: &'r [Relation]) -> Vec<&'r Relation>
where
    M::Value: Send,
{
    use rayon::prelude::*;
    rels.par_iter().filter(|r| !relation_holds(model, r)).collect()
}

/// `m` alternating generators ending (on the right) with `i` at domain `a`,
/// tracked through the domains.
pub fn alternating(rs: &RootSystemData, i: usize, j: usize, a: usize, m: usize) -> Monomial {
    let mut mono = Vec::with_capacity(m);
    let mut d = a;
    for k in 0..m {
        let g = if k % 2 == 0 { i } else { j };
        mono.push(Gen::T(g, d));
        d = rs.act(g, d);
    }
    mono.reverse();
    mono
}

pub fn braid_relation(rs: &RootSystemData, i: usize, j: usize, a: usize, m: u32, kind: RelationKind) -> Relation {
    Relation {
        kind,
        instance: format!("i={} j={} a={}", i + 1, j + 1, rs.domain(a)),
        lhs: Expr::mono(alternating(rs, i, j, a, m as usize)),
        rhs: Expr::mono(alternating(rs, j, i, a, m as usize)),
    }
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_i64_terms(&[(0, -1), (1, 1)])
}

/// The general presentation: idempotents, supports, quadratic and inverse
/// relations, and braid relations of length `m_{i,j;a}`.
pub fn presentation_relations(rs: &RootSystemData) -> Vec<Relation> {
    let na = rs.num_domains();
    let mut out = Vec::new();
    for a in 0..na {
        out.push(Relation {
            kind: RelationKind::Idempotent,
            instance: format!("a={}", rs.domain(a)),
            lhs: Expr::mono(vec![Gen::E(a), Gen::E(a)]),
            rhs: Expr::mono(vec![Gen::E(a)]),
        });
    }
    for a in 0..na {
        for i in 0..rs.rank() {
            let t = Gen::T(i, a);
            out.push(Relation {
                kind: RelationKind::Support,
                instance: format!("i={} a={}", i + 1, rs.domain(a)),
                lhs: Expr::mono(vec![Gen::E(rs.act(i, a)), t, Gen::E(a)]),
                rhs: Expr::mono(vec![t]),
            });
        }
    }
    let mut unit = Expr::zero();
    for a in 0..na {
        unit = unit.plus(LaurentPoly::one(), vec![Gen::E(a)]);
    }
    out.push(Relation { kind: RelationKind::UnitSum, instance: String::new(), lhs: unit, rhs: Expr::one() });
    for a in 0..na {
        for b in 0..na {
            if a != b {
                out.push(Relation {
                    kind: RelationKind::Orthogonal,
                    instance: format!("a={} b={}", rs.domain(a), rs.domain(b)),
                    lhs: Expr::mono(vec![Gen::E(a), Gen::E(b)]),
                    rhs: Expr::zero(),
                });
            }
        }
    }
    for a in 0..na {
        for i in 0..rs.rank() {
            let b = rs.act(i, a);
            let instance = format!("i={} a={}", i + 1, rs.domain(a));
            if b == a {
                // T^2 = (q - 1) T + q E
                out.push(Relation {
                    kind: RelationKind::Quadratic,
                    instance,
                    lhs: Expr::mono(vec![Gen::T(i, a), Gen::T(i, a)]),
                    rhs: Expr::term(q_minus_one(), vec![Gen::T(i, a)]).plus(LaurentPoly::q(), vec![Gen::E(a)]),
                });
            } else {
                out.push(Relation {
                    kind: RelationKind::OddInverse,
                    instance,
                    lhs: Expr::mono(vec![Gen::T(i, b), Gen::T(i, a)]),
                    rhs: Expr::mono(vec![Gen::E(a)]),
                });
            }
        }
    }
    for a in 0..na {
        for i in 0..rs.rank() {
            for j in i + 1..rs.rank() {
                if let Some(m) = rs.coxeter_entry(i, j, a).finite() {
                    out.push(braid_relation(rs, i, j, a, m, RelationKind::Braid(m)));
                }
            }
        }
    }
    out
}

/// Lengths of the braid relations as listed in the explicit presentation of each
/// family, for every domain and pair `i < j` (0-based).
pub fn family_braid_lengths(rs: &RootSystemData) -> Vec<(usize, usize, usize, u32)> {
    let Some(family) = rs.family() else { return Vec::new() };
    let l = rs.rank();
    let mut out = Vec::new();
    for a in 0..rs.num_domains() {
        let d = rs.domain(a);
        for i in 0..l {
            for j in i + 1..l {
                let adjacent = j == i + 1;
                let m = match family {
                    Family::Gl { .. } => {
                        if adjacent {
                            3
                        } else {
                            2
                        }
                    }
                    Family::OspOdd { .. } => {
                        if adjacent && j == l - 1 {
                            4
                        } else if adjacent {
                            3
                        } else {
                            2
                        }
                    }
                    Family::OspEven { .. } => {
                        let p = d.parities();
                        let tag = d.tag().unwrap();
                        let (a1, a2) = (l - 2, l - 1);
                        if (i, j) == (a1, a2) {
                            match (p[a1] == p[a2], tag) {
                                (true, CdTag::D) => 2,
                                (true, _) => 4,
                                (false, _) => 3,
                            }
                        } else if adjacent && j < a1 {
                            3
                        } else if l >= 3 && i == l - 3 && j == a1 {
                            if tag == CdTag::CMinus {
                                2
                            } else {
                                3
                            }
                        } else if l >= 3 && i == l - 3 && j == a2 {
                            if tag == CdTag::CPlus {
                                2
                            } else {
                                3
                            }
                        } else {
                            2
                        }
                    }
                };
                out.push((i, j, a, m));
            }
        }
    }
    out
}

pub fn family_relations(rs: &RootSystemData) -> Vec<Relation> {
    family_braid_lengths(rs)
        .into_iter()
        .map(|(i, j, a, m)| braid_relation(rs, i, j, a, m, RelationKind::FamilyBraid(m)))
        .collect()
}

/// Triples where the explicit family presentation and the Coxeter entries disagree.
pub fn family_length_mismatches(rs: &RootSystemData) -> Vec<(usize, usize, usize, u32, Option<u32>)> {
    family_braid_lengths(rs)
        .into_iter()
        .filter_map(|(i, j, a, m)| {
            let c = rs.coxeter_entry(i, j, a).finite();
            (c != Some(m)).then_some((i, j, a, m, c))
        })
        .collect()
}

/// Zero test for a coefficient expansion.
pub fn is_zero_expr(e: &Expr) -> bool {
    e.terms.iter().all(|(c, _)| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn family_lengths_agree_with_coxeter_entries() {
        for f in [
            Family::Gl { m: 1, n: 1 },
            Family::Gl { m: 2, n: 1 },
            Family::OspOdd { m: 1, n: 2 },
            Family::OspOdd { m: 0, n: 2 },
            Family::OspEven { m: 2, n: 1 },
            Family::OspEven { m: 1, n: 2 },
            Family::OspEven { m: 3, n: 1 },
            Family::OspEven { m: 1, n: 1 },
        ] {
            let rs = build_root_system(f).unwrap();
            assert!(family_length_mismatches(&rs).is_empty(), "{}: {:?}", f, family_length_mismatches(&rs));
        }
    }

    #[test]
    fn alternating_tracks_domains() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        let mono = alternating(&rs, 0, 1, 0, 3);
        // rightmost factor acts at the base
        assert_eq!(mono[2], Gen::T(0, 0));
        if let Gen::T(_, d) = mono[1] {
            assert_eq!(d, rs.act(0, 0));
        }
    }
}
