//! The Coxeter groupoid of a multi-domain root system, realised inside the
//! groupoid of signed coordinate permutations between domains.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::rootsys::{RootSystemData, SignedPermutation};
use crate::Error;

/// A morphism `source → target`; `s_{i,a}` goes from `a` to `i ▷ a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupoidElement {
    pub source: usize,
    pub target: usize,
    pub map: SignedPermutation,
}

/// Result of multiplying two elements: the groupoid is a semigroup with zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Zero,
    Element(GroupoidElement),
}

impl Product {
    pub fn element(self) -> Option<GroupoidElement> {
        match self {
            Product::Zero => None,
            Product::Element(w) => Some(w),
        }
    }
}

/// A word in the generators attached to the domain on which its rightmost letter acts.
/// `letters[0]` is the leftmost factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub base: usize,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(base: usize, letters: Vec<usize>) -> Self {
        Word { base, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Domain on which each letter acts, in the order of `letters`.
    pub fn domains(&self, rs: &RootSystemData) -> Vec<usize> {
        let mut out = vec![0; self.letters.len()];
        let mut d = self.base;
        for k in (0..self.letters.len()).rev() {
            out[k] = d;
            d = rs.act(self.letters[k], d);
        }
        out
    }

    pub fn end(&self, rs: &RootSystemData) -> usize {
        self.letters.iter().rev().fold(self.base, |d, &i| rs.act(i, d))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{}", i + 1)).collect();
        if parts.is_empty() {
            write!(f, "e@{}", self.base)
        } else {
            write!(f, "{}@{}", parts.join(" "), self.base)
        }
    }
}

pub fn identity(rs: &RootSystemData, a: usize) -> GroupoidElement {
    GroupoidElement { source: a, target: a, map: SignedPermutation::identity(rs.ambient()) }
}

pub fn generator(rs: &RootSystemData, i: usize, a: usize) -> GroupoidElement {
    GroupoidElement { source: a, target: rs.act(i, a), map: rs.reflection(i, a).clone() }
}

/// `x y`, nonzero exactly when `y` ends where `x` starts.
pub fn multiply(x: &GroupoidElement, y: &GroupoidElement) -> Product {
    if x.source != y.target {
        return Product::Zero;
    }
    Product::Element(GroupoidElement { source: y.source, target: x.target, map: x.map.compose(&y.map) })
}

/// `s_{i, target(w)} w`.
pub fn left_mul(rs: &RootSystemData, i: usize, w: &GroupoidElement) -> GroupoidElement {
    GroupoidElement {
        source: w.source,
        target: rs.act(i, w.target),
        map: rs.reflection(i, w.target).compose(&w.map),
    }
}

pub fn inverse(w: &GroupoidElement) -> GroupoidElement {
    GroupoidElement { source: w.target, target: w.source, map: w.map.inverse() }
}

/// Number of positive roots at the source sent to negative roots at the target.
pub fn length(rs: &RootSystemData, w: &GroupoidElement) -> usize {
    rs.positive_roots(w.source).iter().filter(|r| rs.root_sign(w.target, &w.map.apply(r)) < 0).count()
}

/// `ℓ(w s_j) < ℓ(w)`, decided by the sign of `w(α_{j,source})`.
pub fn right_descent(rs: &RootSystemData, w: &GroupoidElement, j: usize) -> bool {
    rs.root_sign(w.target, &w.map.apply(rs.simple_root(j, w.source))) < 0
}

/// `ℓ(s_i w) < ℓ(w)`.
pub fn left_descent(rs: &RootSystemData, w: &GroupoidElement, i: usize) -> bool {
    right_descent(rs, &inverse(w), i)
}

pub fn word_to_element(rs: &RootSystemData, w: &Word) -> Result<GroupoidElement, Error> {
    if w.base >= rs.num_domains() {
        return Err(Error::InvalidWord(format!("base domain {} out of range", w.base)));
    }
    let mut e = identity(rs, w.base);
    for &i in w.letters.iter().rev() {
        if i >= rs.rank() {
            return Err(Error::InvalidGenerator { index: i, rank: rs.rank() });
        }
        e = left_mul(rs, i, &e);
    }
    Ok(e)
}

pub fn is_reduced(rs: &RootSystemData, w: &Word) -> Result<bool, Error> {
    Ok(length(rs, &word_to_element(rs, w)?) == w.len())
}

/// Repeatedly strips the smallest left descent.
pub fn canonical_reduced_word(rs: &RootSystemData, w: &GroupoidElement) -> Word {
    let mut letters = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = (0..rs.rank()).find(|&i| left_descent(rs, &cur, i)) {
        letters.push(i);
        cur = left_mul(rs, i, &cur);
    }
    debug_assert!(cur.map.is_identity() && cur.source == cur.target);
    Word { base: w.source, letters }
}

pub fn all_reduced_words(rs: &RootSystemData, w: &GroupoidElement, cap: usize) -> Result<Vec<Word>, Error> {
    fn rec(
        rs: &RootSystemData,
        w: &GroupoidElement,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<(), Error> {
        let descents: Vec<usize> = (0..rs.rank()).filter(|&i| left_descent(rs, w, i)).collect();
        if descents.is_empty() {
            if out.len() >= cap {
                return Err(Error::SizeCapExceeded(cap));
            }
            out.push(Word { base: w.source, letters: prefix.clone() });
            return Ok(());
        }
        for i in descents {
            prefix.push(i);
            rec(rs, &left_mul(rs, i, w), prefix, out, cap)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(rs, w, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

/// All words obtained from `w` by one braid relation.
pub fn braid_moves(rs: &RootSystemData, w: &Word) -> Vec<Word> {
    let doms = w.domains(rs);
    let mut out = Vec::new();
    let l = &w.letters;
    for end in 1..l.len() {
        let (x, y) = (l[end], l[end - 1]);
        if x == y {
            continue;
        }
        let Some(m) = rs.coxeter_entry(x, y, doms[end]).finite() else { continue };
        let m = m as usize;
        if m < 2 || m > end + 1 {
            continue;
        }
        let start = end + 1 - m;
        let alternates = (0..m).all(|k| l[end - k] == if k % 2 == 0 { x } else { y });
        if !alternates {
            continue;
        }
        let mut nl = l.clone();
        for k in 0..m {
            nl[end - k] = if k % 2 == 0 { y } else { x };
        }
        debug_assert!(nl[..start] == l[..start]);
        out.push(Word { base: w.base, letters: nl });
    }
    out
}

/// Closure of `w` under braid moves; stops early once `stop` holds for some word.
pub fn braid_class(
    rs: &RootSystemData,
    w: &Word,
    cap: usize,
    stop: impl Fn(&Word) -> bool,
) -> Result<(Vec<Word>, Option<Word>), Error> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    let mut order = Vec::new();
    while let Some(cur) = queue.pop_front() {
        if stop(&cur) {
            return Ok((order, Some(cur)));
        }
        order.push(cur.clone());
        for nw in braid_moves(rs, &cur) {
            if seen.insert(nw.clone()) {
                if seen.len() > cap {
                    return Err(Error::SizeCapExceeded(cap));
                }
                queue.push_back(nw);
            }
        }
    }
    Ok((order, None))
}

/// Whether the reduced words of one element are connected by braid moves.
pub fn braid_connected(rs: &RootSystemData, words: &[Word], cap: usize) -> Result<bool, Error> {
    let Some(first) = words.first() else { return Ok(true) };
    let (class, _) = braid_class(rs, first, cap, |_| false)?;
    let class: HashSet<Word> = class.into_iter().collect();
    Ok(words.iter().all(|w| class.contains(w)))
}

/// First index `k` with `letters[k] == letters[k + 1]`.
pub fn adjacent_repeat(w: &Word) -> Option<usize> {
    w.letters.windows(2).position(|p| p[0] == p[1])
}

/// Fully enumerated groupoid (all nonzero elements) with cached lengths,
/// left-multiplication tables and canonical reduced words.
#[derive(Clone, Debug)]
pub struct Groupoid {
    rs: Arc<RootSystemData>,
    elements: Vec<GroupoidElement>,
    index: HashMap<GroupoidElement, usize>,
    lengths: Vec<usize>,
    left: Vec<Vec<usize>>,
    words: Vec<Word>,
}

pub const DEFAULT_MAX_ELEMENTS: usize = 200_000;

impl Groupoid {
    /// Breadth-first closure of the identities under left multiplication by generators.
    pub fn enumerate(rs: Arc<RootSystemData>, max_elements: usize) -> Result<Self, Error> {
        let mut seen: HashSet<GroupoidElement> = HashSet::new();
        let mut queue: VecDeque<GroupoidElement> = VecDeque::new();
        for a in 0..rs.num_domains() {
            let e = identity(&rs, a);
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(w) = queue.pop_front() {
            for i in 0..rs.rank() {
                let nw = left_mul(&rs, i, &w);
                if !seen.contains(&nw) {
                    if seen.len() >= max_elements {
                        return Err(Error::SizeCapExceeded(max_elements));
                    }
                    seen.insert(nw.clone());
                    queue.push_back(nw);
                }
            }
        }
        let mut keyed: Vec<(usize, GroupoidElement)> = seen.into_iter().map(|w| (length(&rs, &w), w)).collect();
        keyed.sort_by(|x, y| (x.0, x.1.source, x.1.target, &x.1.map).cmp(&(y.0, y.1.source, y.1.target, &y.1.map)));
        let lengths: Vec<usize> = keyed.iter().map(|k| k.0).collect();
        let elements: Vec<GroupoidElement> = keyed.into_iter().map(|k| k.1).collect();
        let index: HashMap<GroupoidElement, usize> = elements.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let left: Vec<Vec<usize>> =
            (0..rs.rank()).map(|i| elements.iter().map(|w| index[&left_mul(&rs, i, w)]).collect()).collect();
        let mut words: Vec<Word> = Vec::with_capacity(elements.len());
        for (k, w) in elements.iter().enumerate() {
            // elements are sorted by length, so shorter words are already known
            let word = match (0..rs.rank()).find(|&i| lengths[left[i][k]] < lengths[k]) {
                None => Word { base: w.source, letters: Vec::new() },
                Some(i) => {
                    let mut letters = vec![i];
                    letters.extend_from_slice(&words[left[i][k]].letters);
                    Word { base: w.source, letters }
                }
            };
            words.push(word);
        }
        Ok(Groupoid { rs, elements, index, lengths, left, words })
    }

    pub fn root_system(&self) -> &RootSystemData {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystemData> {
        self.rs.clone()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupoidElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &GroupoidElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &GroupoidElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length_of(&self, k: usize) -> usize {
        self.lengths[k]
    }

    /// Index of `s_{i, target(w_k)} w_k`.
    pub fn left_mul_index(&self, i: usize, k: usize) -> usize {
        self.left[i][k]
    }

    pub fn canonical_word(&self, k: usize) -> &Word {
        &self.words[k]
    }

    pub fn identity_index(&self, a: usize) -> usize {
        self.index[&identity(&self.rs, a)]
    }

    pub fn generator_index(&self, i: usize, a: usize) -> usize {
        self.index[&generator(&self.rs, i, a)]
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    pub fn multiply_index(&self, x: usize, y: usize) -> Option<usize> {
        multiply(&self.elements[x], &self.elements[y]).element().map(|w| self.index[&w])
    }

    /// Elements with the given source and target.
    pub fn hom(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.elements[k].source == source && self.elements[k].target == target).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::Family;
    use crate::rootsys::build_root_system;

    fn gpd(f: Family) -> Groupoid {
        Groupoid::enumerate(Arc::new(build_root_system(f).unwrap()), DEFAULT_MAX_ELEMENTS).unwrap()
    }

    #[test]
    fn small_sizes() {
        assert_eq!(gpd(Family::Gl { m: 1, n: 1 }).len(), 144);
        assert_eq!(gpd(Family::OspOdd { m: 1, n: 1 }).len(), 16);
        assert_eq!(gpd(Family::OspEven { m: 1, n: 1 }).len(), 18);
    }

    #[test]
    fn size_cap_is_reported() {
        let rs = Arc::new(build_root_system(Family::Gl { m: 1, n: 1 }).unwrap());
        assert_eq!(Groupoid::enumerate(rs, 100).unwrap_err(), Error::SizeCapExceeded(100));
    }

    #[test]
    fn canonical_words_rebuild_elements() {
        let g = gpd(Family::Gl { m: 1, n: 1 });
        for k in 0..g.len() {
            let w = g.canonical_word(k);
            assert_eq!(w.len(), g.length_of(k));
            assert_eq!(&word_to_element(g.root_system(), w).unwrap(), g.element(k));
            assert_eq!(&canonical_reduced_word(g.root_system(), g.element(k)), w);
        }
    }

    #[test]
    fn zero_product_for_mismatched_domains() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        let x = identity(&rs, 0);
        let y = identity(&rs, 1);
        assert_eq!(multiply(&x, &y), Product::Zero);
        assert_eq!(multiply(&x, &x), Product::Element(x.clone()));
    }

    #[test]
    fn braid_move_three_term() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        // at d_e = (0,0,1,1) generators 1 and 2 (0-based 0, 1) satisfy a length-3 relation
        let w = Word::new(0, vec![0, 1, 0]);
        let mv = braid_moves(&rs, &w);
        assert!(mv.contains(&Word::new(0, vec![1, 0, 1])));
        for v in mv {
            assert_eq!(word_to_element(&rs, &v).unwrap(), word_to_element(&rs, &w).unwrap());
        }
    }
}
