//! Self-contained verification routines, each returning a pass/fail record with
//! a short detail line. Used by the acceptance suite and `verify-all`.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domains::{enumerate_domains, tau_minus, tau_plus, Domain, Family, ParityDomain};
use crate::groupoid::{
    adjacent_repeat, all_reduced_words, braid_class, braid_connected, generator, inverse, is_reduced, left_descent,
    multiply, right_descent, Groupoid, Word, DEFAULT_MAX_ELEMENTS,
};
use crate::hecke::{check_associativity, check_associativity_on, check_integrality, composable_triples, specialization_matches, HeckeAlgebra};
use crate::rootsys::{build_root_system, RootSystemData};
use crate::superreps::{dimension_formula, verify_isomorphism};
use crate::weylreps::{equivalent, irreps, regular_representation, separating_length, split_regular_module, verify_irrep, WeylType};
use crate::{Error, LaurentPoly, Rational};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Check {
    fn timed(name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String), Error>) -> Check {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {}", e)),
        };
        Check { name: name.into(), passed, detail, seconds: start.elapsed().as_secs_f64() }
    }
}

/// Families used by the dimension, presentation and length checks, with `|W \ {0}|`.
pub fn reference_families() -> Vec<(Family, usize)> {
    vec![
        (Family::Gl { m: 1, n: 1 }, 144),
        (Family::Gl { m: 2, n: 1 }, 1200),
        (Family::Gl { m: 1, n: 2 }, 1200),
        (Family::OspOdd { m: 1, n: 1 }, 16),
        (Family::OspOdd { m: 1, n: 2 }, 144),
        (Family::OspOdd { m: 0, n: 2 }, 8),
        (Family::OspOdd { m: 2, n: 1 }, 144),
        (Family::OspEven { m: 1, n: 1 }, 18),
        (Family::OspEven { m: 2, n: 1 }, 128),
        (Family::OspEven { m: 1, n: 2 }, 200),
    ]
}

pub fn groupoid(family: Family) -> Result<Groupoid, Error> {
    Groupoid::enumerate(Arc::new(build_root_system(family)?), DEFAULT_MAX_ELEMENTS)
}

pub fn dimension(family: Family, expected: Option<usize>) -> Check {
    Check::timed(format!("dimension {}", family), || {
        let n = groupoid(family)?.len();
        let formula = dimension_formula(family);
        let ok = BigInt::from(n) == formula && expected.is_none_or(|e| e == n);
        Ok((ok, format!("enumerated {} formula {}", n, formula)))
    })
}

pub fn presentation(family: Family) -> Check {
    Check::timed(format!("presentation {}", family), || {
        let h = HeckeAlgebra::new(Arc::new(groupoid(family)?), LaurentPoly::q());
        let r = h.verify_presentation();
        let mut detail = format!("{} general and {} family relations", r.general_checked, r.family_checked);
        if let Some(f) = r.general_failures.iter().chain(&r.family_failures).chain(&r.length_mismatches).next() {
            detail.push_str(&format!("; first failure {}", f));
        }
        Ok((r.passed(), detail))
    })
}

pub fn associativity_exhaustive(family: Family) -> Check {
    Check::timed(format!("associativity {} (all triples)", family), || {
        let g = groupoid(family)?;
        let h = HeckeAlgebra::new(Arc::new(g), LaurentPoly::q());
        let table = h.structure_constants();
        Ok(match check_associativity(&table, h.dim(), None) {
            Ok(n) => (true, format!("{} triples", n)),
            Err(t) => (false, format!("fails at {:?}", t)),
        })
    })
}

pub fn associativity_sampled(family: Family, count: usize, seed: u64) -> Check {
    Check::timed(format!("associativity {} ({} sampled triples)", family, count), || {
        let g = Arc::new(groupoid(family)?);
        let h = HeckeAlgebra::new(g.clone(), LaurentPoly::q());
        let table = h.structure_constants();
        // half uniform, half composable so that most products are nonzero
        let uniform = check_associativity(&table, h.dim(), Some((count / 2, seed)));
        let triples = composable_triples(&g, count - count / 2, seed ^ 0x5eed);
        let comp = check_associativity_on(&table, h.dim(), &triples);
        Ok(match (uniform, comp) {
            (Ok(a), Ok(b)) => (true, format!("{} triples", a + b)),
            (Err(t), _) | (_, Err(t)) => (false, format!("fails at {:?}", t)),
        })
    })
}

/// Braid connectivity of the reduced words of every element, and the reduction
/// of random non-reduced words to ones with a repeated adjacent letter.
pub fn matsumoto(family: Family, samples: usize, seed: u64) -> Check {
    Check::timed(format!("matsumoto {}", family), || {
        let g = groupoid(family)?;
        let rs = g.root_system();
        let bad = (0..g.len()).into_par_iter().find_map_any(|k| {
            let words = match all_reduced_words(rs, g.element(k), 1_000_000) {
                Ok(w) => w,
                Err(e) => return Some(format!("element {}: {}", k, e)),
            };
            match braid_connected(rs, &words, 1_000_000) {
                Ok(true) => None,
                Ok(false) => Some(format!("reduced words of {} are not braid connected", g.canonical_word(k))),
                Err(e) => Some(format!("element {}: {}", k, e)),
            }
        });
        if let Some(b) = bad {
            return Ok((false, b));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let maxlen = g.max_length() + 2;
        let mut words = Vec::with_capacity(samples);
        while words.len() < samples {
            let len = rng.gen_range(2..=maxlen);
            let w = Word::new(rng.gen_range(0..rs.num_domains()), (0..len).map(|_| rng.gen_range(0..rs.rank())).collect());
            if !is_reduced(rs, &w)? {
                words.push(w);
            }
        }
        let bad = words.par_iter().find_map_any(|w| match braid_class(rs, w, 2_000_000, |x| adjacent_repeat(x).is_some()) {
            Ok((_, Some(_))) => None,
            Ok((_, None)) => Some(format!("{} has no braid-equivalent word with a repeated letter", w)),
            Err(e) => Some(format!("{}: {}", w, e)),
        });
        Ok(match bad {
            Some(b) => (false, b),
            None => (true, format!("{} elements, {} non-reduced words", g.len(), samples)),
        })
    })
}

/// `ℓ(w) = ℓ(w⁻¹)`, subadditivity and the descent criteria.
pub fn length_theory(family: Family) -> Check {
    Check::timed(format!("length theory {}", family), || {
        let g = groupoid(family)?;
        let rs = g.root_system();
        let n = g.len();
        let bad = (0..n).into_par_iter().find_map_any(|k| {
            let w = g.element(k);
            let l = g.length_of(k);
            if g.index_of(&inverse(w)).map(|x| g.length_of(x)) != Some(l) {
                return Some(format!("l(w^-1) != l(w) at {}", g.canonical_word(k)));
            }
            for i in 0..rs.rank() {
                let lw = g.length_of(g.left_mul_index(i, k));
                let expect = if left_descent(rs, w, i) { l.checked_sub(1) } else { Some(l + 1) };
                if Some(lw) != expect {
                    return Some(format!("left descent {} at {}", i + 1, g.canonical_word(k)));
                }
                let s = generator(rs, i, rs.act(i, w.source));
                let ws = multiply(w, &s).element().and_then(|x| g.index_of(&x)).map(|x| g.length_of(x));
                let expect = if right_descent(rs, w, i) { l.checked_sub(1) } else { Some(l + 1) };
                if ws != expect {
                    return Some(format!("right descent {} at {}", i + 1, g.canonical_word(k)));
                }
            }
            for y in 0..n {
                if g.element(y).target != w.source {
                    continue;
                }
                match g.multiply_index(k, y) {
                    Some(p) if g.length_of(p) <= l + g.length_of(y) => {}
                    _ => return Some(format!("subadditivity fails for {} and {}", k, y)),
                }
            }
            None
        });
        Ok(match bad {
            Some(b) => (false, b),
            None => (true, format!("{} elements", n)),
        })
    })
}

pub fn poincare(t: WeylType) -> Check {
    Check::timed(format!("poincare {}", t), || {
        let p = t.poincare();
        Ok((p == t.poincare_by_enumeration(), format!("{}", p)))
    })
}

/// Relations, dimension count, separation by traces and agreement with the
/// decomposition of the regular module.
pub fn classical_irreps(t: WeylType, q0: &Rational, seed: u64) -> Check {
    Check::timed(format!("irreps {}", t), || {
        let reps = irreps(t, q0)?;
        if let Some(f) = reps.iter().flat_map(|r| verify_irrep(t, r, q0)).next() {
            return Ok((false, f));
        }
        let sum: usize = reps.iter().map(|r| r.dim * r.dim).sum();
        if BigInt::from(sum) != t.order() {
            return Ok((false, format!("sum of squared dimensions {} != {}", sum, t.order())));
        }
        let Some(sep) = separating_length(&reps, 6) else {
            return Ok((false, "trace vectors do not separate the irreps".into()));
        };
        let dec = split_regular_module(&regular_representation(t, q0), seed)?;
        if dec.irreps.len() != reps.len() {
            return Ok((false, format!("regular module has {} constituents, expected {}", dec.irreps.len(), reps.len())));
        }
        for (r, m) in dec.irreps.iter().zip(&dec.multiplicities) {
            if r.dim != *m || reps.iter().filter(|s| equivalent(&s.generators, &r.generators)).count() != 1 {
                return Ok((false, format!("constituent of dimension {} does not match", r.dim)));
            }
        }
        let dims: Vec<String> = reps.iter().map(|r| r.dim.to_string()).collect();
        Ok((true, format!("{} irreps of dims [{}], separated by words of length {}", reps.len(), dims.join(","), sep)))
    })
}

pub fn isomorphism(family: Family, q0: &Rational) -> Check {
    Check::timed(format!("isomorphism {} at q={}", family, q0), || {
        let r = verify_isomorphism(family, q0)?;
        let detail = format!(
            "{} summands, image rank {}, basis rank {}, dimension {}",
            r.summands.len(),
            r.image_rank,
            r.injectivity_rank,
            r.algebra_dim
        );
        Ok(match r.witness() {
            None => (true, detail),
            Some(w) => (false, format!("{}; {}", detail, w)),
        })
    })
}

pub fn integrality(family: Family, q0: &Rational) -> Check {
    Check::timed(format!("integrality {}", family), || {
        let g = Arc::new(groupoid(family)?);
        let poly = HeckeAlgebra::new(g.clone(), LaurentPoly::q()).structure_constants();
        let rep = check_integrality(&g, &poly);
        let eval = HeckeAlgebra::new(g, q0.clone()).structure_constants();
        let same = specialization_matches(&poly, &eval, q0)?;
        Ok((rep.passed() && same, format!("{} coefficients, specialisation matches: {}", rep.entries, same)))
    })
}

pub fn axioms(family: Family) -> Check {
    Check::timed(format!("axioms {}", family), || {
        let r = build_root_system(family)?.check_axioms();
        Ok(match r.first_failure() {
            None => (true, format!("{} axioms", r.results.len())),
            Some(f) => (false, format!("axiom {}: {:?}", f.axiom, f.witness)),
        })
    })
}

/// A root system with one simple root negated must be rejected with a witness.
pub fn mutated_axioms() -> Check {
    Check::timed("axioms of a corrupted system", || {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 })?;
        let mut parts = rs.parts();
        parts.simple[0][0] = parts.simple[0][0].neg();
        let bad = RootSystemData::from_parts(parts)?;
        let r = bad.check_axioms();
        Ok(match r.first_failure() {
            Some(f) if f.witness.is_some() => (true, format!("axiom {} fails: {}", f.axiom, f.witness.as_ref().unwrap())),
            _ => (false, "corruption not detected".into()),
        })
    })
}

/// The twelve block-sorting permutations of the `gl(2|2)` domains.
pub fn worked_example() -> Check {
    Check::timed("tau permutations of gl(2|2)", || {
        let f = Family::Gl { m: 1, n: 1 };
        let expected = [
            ([0, 0, 1, 1], "1234", "3412"),
            ([0, 1, 0, 1], "1324", "2413"),
            ([0, 1, 1, 0], "1423", "2314"),
            ([1, 0, 0, 1], "2314", "1423"),
            ([1, 0, 1, 0], "2413", "1324"),
            ([1, 1, 0, 0], "3412", "1234"),
        ];
        let listed: HashSet<Domain> =
            expected.iter().map(|(d, _, _)| Domain::Parity(ParityDomain(d.to_vec()))).collect();
        if listed != enumerate_domains(f).into_iter().collect() {
            return Ok((false, "domain set differs".into()));
        }
        for (d, tp, tm) in expected {
            let d = Domain::Parity(ParityDomain(d.to_vec()));
            let (p, m) = (tau_plus(f, &d)?.to_string(), tau_minus(f, &d)?.to_string());
            if p != tp || m != tm {
                return Ok((false, format!("at {}: got {} {}, expected {} {}", d, p, m, tp, tm)));
            }
        }
        Ok((true, "12 permutations".into()))
    })
}

/// Checks relevant to one family: dimension, axioms, presentation, length theory
/// and, at desk scale, associativity, Matsumoto, integrality and isomorphism.
pub fn family_suite(family: Family, q0: &Rational, seed: u64) -> Vec<Check> {
    let mut out = vec![dimension(family, None), axioms(family), presentation(family), length_theory(family)];
    let size = groupoid(family).map(|g| g.len()).unwrap_or(usize::MAX);
    if size <= 400 {
        out.push(associativity_exhaustive(family));
        out.push(matsumoto(family, 1000, seed));
        out.push(integrality(family, q0));
    } else {
        out.push(associativity_sampled(family, 100_000, seed));
    }
    if size <= 1500 {
        out.push(isomorphism(family, q0));
    }
    out
}
