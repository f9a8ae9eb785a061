//! Hereditary collections (abstract simplicial complexes) on the ground set
//! `0..n`, stored by their bases.
//!
//! A collection is determined by its anti-chain of inclusion-maximal
//! independent sets; a set is independent iff it lies inside some basis.
//! The axiom checks (PR, BR, the matroid axiom and the exchange properties)
//! are exhaustive and meant for small ground sets.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::subset::{ElementSet, MAX_GROUND};

/// Ground sets larger than this are refused by [`AxiomReport::compute`]
/// unless forced.
pub const AXIOM_GROUND_LIMIT: usize = 16;

/// Ground-set limit for [`HereditaryCollection::isomorphism`].
pub const ISOMORPHISM_GROUND_LIMIT: usize = 8;

/// Ground-set limit for [`enumerate_collections`].
pub const ENUMERATION_GROUND_LIMIT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HereditaryCollection {
    n: usize,
    /// Lexicographically sorted anti-chain, never empty.
    bases: Vec<ElementSet>,
}

/// A collection on a smaller ground set together with the order-preserving
/// map `labels[new] = old` back to the original elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub collection: HereditaryCollection,
    pub labels: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeProperties {
    pub ep: bool,
    pub dep: bool,
    pub sep: bool,
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundTooLarge {
            found: n,
            limit: MAX_GROUND,
        })
    } else {
        Ok(())
    }
}

fn check_range(n: usize, set: ElementSet) -> Result<()> {
    match set.max() {
        Some(e) if e >= n => Err(Error::ElementOutOfRange {
            element: e + 1,
            ground: n,
        }),
        _ => Ok(()),
    }
}

/// Inclusion-maximal members, deduplicated and sorted.
fn maximal_members(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut sorted: Vec<ElementSet> = sets.iter().copied().unique().collect();
    // larger sets first so that each candidate only needs checking against
    // the maxima already kept
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut kept: Vec<ElementSet> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl HereditaryCollection {
    /// Builds a collection from an anti-chain of bases.
    pub fn from_bases(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        check_ground(n)?;
        if bases.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for &b in &bases {
            check_range(n, b)?;
        }
        for (i, a) in bases.iter().enumerate() {
            for b in &bases[i + 1..] {
                if a == b {
                    return Err(Error::NotAntichain(format!("{a} is listed twice")));
                }
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::NotAntichain(format!("{a} and {b} are comparable")));
                }
            }
        }
        let mut bases = bases;
        bases.sort();
        Ok(HereditaryCollection { n, bases })
    }

    /// The downward closure of `sets`, canonicalised to its maximal members.
    pub fn from_independents(n: usize, sets: &[ElementSet]) -> Result<Self> {
        check_ground(n)?;
        if sets.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for &s in sets {
            check_range(n, s)?;
        }
        Ok(HereditaryCollection {
            n,
            bases: maximal_members(sets),
        })
    }

    /// The collection whose independent sets are those accepted by
    /// `is_independent`, which must be downward closed and accept `∅`.
    pub fn from_predicate(n: usize, mut is_independent: impl FnMut(ElementSet) -> bool) -> Self {
        assert!(n <= MAX_GROUND);
        let mut bases = Vec::new();
        maximal_walk(n, ElementSet::EMPTY, 0, &mut is_independent, &mut bases);
        bases.sort();
        HereditaryCollection { n, bases }
    }

    /// `U_{m,n}`: every set of at most `m` elements is independent.
    pub fn uniform(m: usize, n: usize) -> Self {
        assert!(m <= n && n <= MAX_GROUND);
        HereditaryCollection {
            n,
            bases: crate::subset::k_subsets(n, m).collect(),
        }
    }

    /// `(E, {∅})`.
    pub fn empty(n: usize) -> Self {
        Self::uniform(0, n)
    }

    /// `(E, Pow(E))`.
    pub fn free(n: usize) -> Self {
        Self::uniform(n, n)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn rank(&self) -> usize {
        self.bases.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    pub fn is_basis(&self, x: ElementSet) -> bool {
        self.bases.binary_search(&x).is_ok()
    }

    /// Independence without range checking; elements outside the ground set
    /// are simply never independent.
    pub fn contains(&self, x: ElementSet) -> bool {
        self.bases.iter().any(|b| x.is_subset(*b))
    }

    pub fn is_independent(&self, x: ElementSet) -> Result<bool> {
        check_range(self.n, x)?;
        Ok(self.contains(x))
    }

    /// Elements `p` with `{p}` independent.
    pub fn independent_points(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(ElementSet::EMPTY, |acc, b| acc.union(*b))
    }

    pub fn equal_basis_sizes(&self) -> bool {
        self.bases.iter().map(|b| b.len()).all_equal()
    }

    /// Every independent set, ordered by size then lexicographically.
    pub fn independent_sets(&self) -> Vec<ElementSet> {
        let mut seen = HashSet::new();
        for b in &self.bases {
            seen.extend(b.subsets());
        }
        let mut all: Vec<ElementSet> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        all
    }

    /// Inclusion-minimal dependent sets, sorted lexicographically.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for i in self.independent_sets() {
            let start = i.max().map_or(0, |m| m + 1);
            for e in start..self.n {
                let x = i.with(e);
                if !self.contains(x) && x.iter().all(|y| self.contains(x.without(y))) {
                    out.push(x);
                }
            }
        }
        out.sort();
        out
    }

    /// Bases of the dual are the complements of the bases.
    pub fn dual(&self) -> HereditaryCollection {
        let ground = self.ground();
        let mut bases: Vec<ElementSet> = self.bases.iter().map(|b| ground.difference(*b)).collect();
        bases.sort();
        HereditaryCollection { n: self.n, bases }
    }

    fn relabel(&self, keep: ElementSet, generators: &[ElementSet]) -> Relabeled {
        let labels: Vec<usize> = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (new, &old) in labels.iter().enumerate() {
            new_index[old] = new;
        }
        let mapped: Vec<ElementSet> = generators
            .iter()
            .map(|g| g.intersection(keep).iter().map(|e| new_index[e]).collect())
            .collect();
        Relabeled {
            collection: HereditaryCollection {
                n: labels.len(),
                bases: maximal_members(&mapped),
            },
            labels,
        }
    }

    /// `H ∖ X`: independent sets of `H` avoiding `X`, on the ground set
    /// `E ∖ X` relabelled to `0..n-|X|`.
    pub fn delete(&self, x: ElementSet) -> Result<Relabeled> {
        check_range(self.n, x)?;
        let keep = self.ground().difference(x);
        Ok(self.relabel(keep, &self.bases))
    }

    /// `H / X`: `Y ⊆ E ∖ X` is independent iff `Y ∪ B_X` is independent for
    /// some maximal independent subset `B_X` of `X`.
    pub fn contract(&self, x: ElementSet) -> Result<Relabeled> {
        check_range(self.n, x)?;
        let traces: Vec<ElementSet> = self.bases.iter().map(|b| b.intersection(x)).collect();
        let maximal = maximal_members(&traces);
        let generators: Vec<ElementSet> = self
            .bases
            .iter()
            .zip(&traces)
            .filter(|(_, t)| maximal.contains(t))
            .map(|(b, _)| b.difference(x))
            .collect();
        let keep = self.ground().difference(x);
        Ok(self.relabel(keep, &generators))
    }

    /// `H ∖ delete / contract`, relabelled to the surviving elements.
    pub fn minor(&self, delete: ElementSet, contract: ElementSet) -> Result<Relabeled> {
        check_range(self.n, delete)?;
        check_range(self.n, contract)?;
        if !delete.is_disjoint(contract) {
            return Err(Error::OverlappingSets);
        }
        let deleted = self.delete(delete)?;
        let position = |old: usize| deleted.labels.iter().position(|&l| l == old).unwrap();
        let inner: ElementSet = contract.iter().map(position).collect();
        let contracted = deleted.collection.contract(inner)?;
        let labels = contracted
            .labels
            .iter()
            .map(|&mid| deleted.labels[mid])
            .collect();
        Ok(Relabeled {
            collection: contracted.collection,
            labels,
        })
    }

    /// Direct sum; the elements of `other` are shifted past those of `self`.
    pub fn direct_sum(&self, other: &HereditaryCollection) -> Result<HereditaryCollection> {
        let n = self.n + other.n;
        check_ground(n)?;
        let mut bases: Vec<ElementSet> = self
            .bases
            .iter()
            .cartesian_product(&other.bases)
            .map(|(a, b)| a.union(b.shifted(self.n)))
            .collect();
        bases.sort();
        Ok(HereditaryCollection { n, bases })
    }

    /// Point replacement, in the equivalent basis form: for every
    /// independent point `p` and basis `B ∌ p` some `B - b + p` is
    /// independent.
    pub fn satisfies_pr(&self) -> bool {
        let points = self.independent_points();
        points.iter().all(|p| {
            self.bases
                .iter()
                .filter(|b| !b.contains(p))
                .all(|b| b.iter().any(|x| self.contains(b.without(x).with(p))))
        })
    }

    /// Basis replacement: for every independent point `p` and basis `B` some
    /// `B - b + p` is a basis.
    pub fn satisfies_br(&self) -> bool {
        self.br_violation().is_none()
    }

    /// A pair `(p, B)` violating basis replacement.
    pub fn br_violation(&self) -> Option<(usize, ElementSet)> {
        let points = self.independent_points();
        points.iter().find_map(|p| {
            self.bases
                .iter()
                .find(|b| !b.iter().any(|x| self.is_basis(b.without(x).with(p))))
                .map(|b| (p, *b))
        })
    }

    /// The augmentation axiom: for independent `I`, `J` with
    /// `|I| = |J| + 1` some `i ∈ I ∖ J` has `J + i` independent.
    ///
    /// For fixed `J` with augmenting elements `A(J)`, a violating `I` exists
    /// iff some basis has more than `|J|` elements outside `A(J)`.
    pub fn is_matroid(&self) -> bool {
        if !self.equal_basis_sizes() {
            return false;
        }
        self.independent_sets().into_iter().all(|j| {
            let augmenting: ElementSet = (0..self.n)
                .filter(|&e| !j.contains(e) && self.contains(j.with(e)))
                .collect();
            self.bases
                .iter()
                .all(|b| b.difference(augmenting).len() <= j.len())
        })
    }

    /// EP, DEP and SEP evaluated over all ordered basis pairs.
    pub fn exchange_properties(&self) -> ExchangeProperties {
        let mut props = ExchangeProperties {
            ep: true,
            dep: true,
            sep: true,
        };
        for a in &self.bases {
            for b in &self.bases {
                for x in a.difference(*b) {
                    let candidates = b.difference(*a);
                    let ep = |y: usize| self.is_basis(a.without(x).with(y));
                    let dep = |y: usize| self.is_basis(b.without(y).with(x));
                    props.ep &= candidates.iter().any(ep);
                    props.dep &= candidates.iter().any(dep);
                    props.sep &= candidates.iter().any(|y| ep(y) && dep(y));
                }
            }
        }
        props
    }

    /// A bijection `map[e]` of ground sets carrying independent sets of
    /// `self` exactly onto those of `other`, found by exhaustive search.
    pub fn isomorphism(&self, other: &HereditaryCollection) -> Result<Option<Vec<usize>>> {
        if self.n != other.n {
            return Ok(None);
        }
        if self.n > ISOMORPHISM_GROUND_LIMIT {
            return Err(Error::GroundTooLarge {
                found: self.n,
                limit: ISOMORPHISM_GROUND_LIMIT,
            });
        }
        let profile = |h: &HereditaryCollection| h.bases.iter().map(|b| b.len()).sorted().collect_vec();
        if self.bases.len() != other.bases.len() || profile(self) != profile(other) {
            return Ok(None);
        }
        let target: HashSet<ElementSet> = other.bases.iter().copied().collect();
        Ok((0..self.n).permutations(self.n).find(|perm| {
            self.bases.iter().all(|b| target.contains(&b.map(perm)))
        }))
    }

    /// First subset, by size then lexicographically, on which the two
    /// collections disagree about independence.
    pub fn first_disagreement(&self, other: &HereditaryCollection) -> Option<ElementSet> {
        let n = self.n.max(other.n);
        (0..=n)
            .flat_map(|k| crate::subset::k_subsets(n, k))
            .find(|&x| self.contains(x) != other.contains(x))
    }
}

fn maximal_walk(
    n: usize,
    current: ElementSet,
    next: usize,
    is_independent: &mut impl FnMut(ElementSet) -> bool,
    out: &mut Vec<ElementSet>,
) {
    let mut maximal = true;
    for e in 0..n {
        if current.contains(e) {
            continue;
        }
        let candidate = current.with(e);
        if is_independent(candidate) {
            maximal = false;
            if e >= next {
                maximal_walk(n, candidate, e + 1, is_independent, out);
            }
        }
    }
    if maximal {
        out.push(current);
    }
}

/// Every hereditary collection on `0..n` (every nonempty anti-chain of the
/// power set) exactly once. Refuses `n > 4`.
pub fn enumerate_collections(n: usize) -> Result<impl Iterator<Item = HereditaryCollection>> {
    if n > ENUMERATION_GROUND_LIMIT {
        return Err(Error::GroundTooLarge {
            found: n,
            limit: ENUMERATION_GROUND_LIMIT,
        });
    }
    let subsets: Vec<ElementSet> = (0..1u64 << n).map(ElementSet::from_bits).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichain_walk(n, &subsets, 0, &mut chosen, &mut out);
    Ok(out.into_iter())
}

fn antichain_walk(
    n: usize,
    subsets: &[ElementSet],
    start: usize,
    chosen: &mut Vec<ElementSet>,
    out: &mut Vec<HereditaryCollection>,
) {
    if !chosen.is_empty() {
        let mut bases = chosen.clone();
        bases.sort();
        out.push(HereditaryCollection { n, bases });
    }
    for i in start..subsets.len() {
        let s = subsets[i];
        if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
            chosen.push(s);
            antichain_walk(n, subsets, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// The PR / BR / matroid / exchange report printed by `sbrep check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub pr: bool,
    pub br: bool,
    pub matroid: bool,
    pub exchange: ExchangeProperties,
    pub rank: usize,
    pub basis_count: usize,
}

impl AxiomReport {
    pub fn compute(h: &HereditaryCollection, force: bool) -> Result<Self> {
        if h.ground_size() > AXIOM_GROUND_LIMIT && !force {
            return Err(Error::GroundTooLarge {
                found: h.ground_size(),
                limit: AXIOM_GROUND_LIMIT,
            });
        }
        Ok(AxiomReport {
            pr: h.satisfies_pr(),
            br: h.satisfies_br(),
            matroid: h.is_matroid(),
            exchange: h.exchange_properties(),
            rank: h.rank(),
            basis_count: h.basis_count(),
        })
    }
}
