//! Permutations, generated groups, cycle indices, and orbit counting on
//! ell-subsets, tied to permanents through per(I + tX) = prod_l (1 + t^l)^{c_l}
//! over the cycle lengths l of the permutation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::subsets::subset_masks;
use crate::unipoly::UniPoly;

pub const DEFAULT_CLOSURE_CAP: usize = 50_000;

/// A permutation of {1, ..., n} stored as 0-based images:
/// `images\[i\]` is the image of point i.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation { n });
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// From disjoint-or-not cycles of 1-based points, e.g. `[[1,2,3]]` on n=4.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > n || to == 0 || to > n {
                    return Err(Error::InvalidPermutation { n });
                }
                images[from - 1] = to - 1;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Composition acting left-to-right on points: (a.then(b))(x) = b(a(x)).
    pub fn then(&self, b: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| b.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Image of a subset bitmask.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.images.len() {
            if mask >> i & 1 == 1 {
                out |= 1 << self.images[i];
            }
        }
        out
    }

    /// The 0/1 matrix with a 1 in row i, column p(i).
    pub fn matrix(&self) -> ExactMatrix {
        let n = self.images.len();
        let mut m = ExactMatrix::zeros(n);
        for (i, &j) in self.images.iter().enumerate() {
            m.set(i, j, BiPoly::one());
        }
        m
    }

    /// Cycles as 1-based point lists, each starting at its smallest point,
    /// ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
                if x == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// counts\[l\] = number of cycles of length l, for l = 1..=n.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.images.len() + 1];
        for cycle in self.cycles() {
            counts[cycle.len()] += 1;
        }
        counts
    }

    /// One-line digits like "213"; only unambiguous for n <= 9.
    pub fn one_line_string(&self) -> String {
        self.images.iter().map(|&x| (x + 1).to_string()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        let nontrivial: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            let points: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}

/// Parse a comma-separated list of generators in cycle notation, e.g.
/// `"(1 2 3 4),(1 3)"` or `"(1 2)(3 4)"`. Points are 1-based; `n` is the
/// degree (use the maximum point when unsure).
pub fn parse_generators(text: &str, n: usize) -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    for part in split_top_level(text) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = part;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected `(` in generator `{part}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced `(` in `{part}`")))?;
            let inner = &rest[1..close];
            let points: Vec<usize> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad point `{s}`: {e}")))
                })
                .collect::<Result<_>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = &rest[close + 1..];
        }
        gens.push(Permutation::from_cycles(n, &cycles)?);
    }
    if gens.is_empty() {
        return Err(Error::Parse("no generators given".into()));
    }
    Ok(gens)
}

/// Largest point mentioned in a generator string, for inferring n.
pub fn max_point(text: &str) -> Option<usize> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .filter_map(|s| s.parse::<usize>().ok())
        .max()
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// A permutation group given by its generators and its full,
/// deduplicated element list, sorted by one-line form.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    pub n: usize,
    pub generators: Vec<Permutation>,
    pub elements: Vec<Permutation>,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Breadth-first closure of the generators under composition. Errors when
/// more than `cap` elements appear.
pub fn group_closure(gens: &[Permutation], cap: usize) -> Result<GroupClosure> {
    let n = gens
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::Parse("no generators given".into()))?;
    for g in gens {
        if g.degree() != n {
            return Err(Error::AmbientMismatch {
                a: n,
                b: g.degree(),
            });
        }
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue: Vec<Permutation> = vec![Permutation::identity(n)];
    seen.insert(queue[0].clone());
    while let Some(next) = queue.pop() {
        for g in gens {
            let product = next.then(g);
            if seen.insert(product.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                queue.push(product);
            }
        }
    }
    Ok(GroupClosure {
        n,
        generators: gens.to_vec(),
        elements: seen.into_iter().collect(),
    })
}

/// per(I + tX) for a permutation matrix X, via the cycle decomposition:
/// prod over cycle lengths l of (1 + t^l)^{count_l}.
pub fn per_i_plus_tx(p: &Permutation) -> UniPoly {
    let mut acc = UniPoly::one();
    for (len, &count) in p.cycle_type().iter().enumerate().skip(1) {
        if count == 0 {
            continue;
        }
        let mut factor_coeffs = vec![BigInt::zero(); len + 1];
        factor_coeffs[0] = BigInt::from(1);
        factor_coeffs[len] = BigInt::from(1);
        let factor = UniPoly::from_coeffs(factor_coeffs);
        for _ in 0..count {
            acc = &acc * &factor;
        }
    }
    acc
}

/// The cycle index of a group: for each cycle type, the number of group
/// elements with that type, kept over the common denominator |G|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    pub n: usize,
    pub order: usize,
    /// cycle type (counts by length, index 0 unused) -> element count
    pub terms: BTreeMap<Vec<usize>, usize>,
}

impl CycleIndex {
    /// Substitute z_l = f(l) as a univariate polynomial and divide by the
    /// group order; the division is exact for the substitutions used here.
    pub fn substitute(&self, f: impl Fn(usize) -> UniPoly) -> UniPoly {
        let mut sum = UniPoly::zero();
        for (cycle_type, &count) in &self.terms {
            let mut term = UniPoly::constant(BigInt::from(count));
            for (len, &c) in cycle_type.iter().enumerate().skip(1) {
                let base = f(len);
                for _ in 0..c {
                    term = &term * &base;
                }
            }
            sum = &sum + &term;
        }
        exact_div(&sum, self.order)
    }
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (cycle_type, &count) in &self.terms {
            let mut monomial: Vec<String> = Vec::new();
            for (len, &c) in cycle_type.iter().enumerate().skip(1) {
                if c == 0 {
                    continue;
                }
                monomial.push(if c == 1 {
                    format!("z{len}")
                } else {
                    format!("z{len}^{c}")
                });
            }
            let vars = if monomial.is_empty() {
                "1".to_string()
            } else {
                monomial.join("*")
            };
            parts.push(if count == 1 {
                vars
            } else {
                format!("{count}*{vars}")
            });
        }
        write!(f, "({})/{}", parts.join(" + "), self.order)
    }
}

fn exact_div(p: &UniPoly, d: usize) -> UniPoly {
    let d = BigInt::from(d);
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&d);
            assert!(r.is_zero(), "coefficient {c} not divisible by {d}");
            q
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// Average of cycle-type monomials over the group.
pub fn cycle_index(group: &GroupClosure) -> CycleIndex {
    let mut terms: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for p in &group.elements {
        *terms.entry(p.cycle_type()).or_insert(0) += 1;
    }
    CycleIndex {
        n: group.n,
        order: group.order(),
        terms,
    }
}

/// Orbits of the group on ell-subsets under its generators, as sorted
/// lists of subset masks.
pub fn orbit_partition(group: &GroupClosure, ell: usize) -> Result<Vec<Vec<u64>>> {
    let n = group.n;
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let masks = subset_masks(n, ell);
    let index: BTreeMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut seen = vec![false; masks.len()];
    let mut orbits = Vec::new();
    for start in 0..masks.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![masks[start]];
        seen[start] = true;
        let mut frontier = vec![masks[start]];
        while let Some(mask) = frontier.pop() {
            for g in &group.generators {
                let image = g.apply_mask(mask);
                let idx = index[&image];
                if !seen[idx] {
                    seen[idx] = true;
                    orbit.push(image);
                    frontier.push(image);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Number of orbits of the group on ell-subsets, computed two ways with
/// mandatory agreement: the averaged count of fixed ell-sets per element,
/// and a direct orbit partition.
pub fn orbit_count_ell_sets(group: &GroupClosure, ell: usize) -> Result<BigInt> {
    let n = group.n;
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let masks = subset_masks(n, ell);
    let mut fixed_total: u64 = 0;
    for p in &group.elements {
        fixed_total += masks.iter().filter(|&&m| p.apply_mask(m) == m).count() as u64;
    }
    let (avg, rem) = BigInt::from(fixed_total).div_rem(&BigInt::from(group.order()));
    assert!(rem.is_zero(), "fixed-point total must divide by |G|");

    let direct = orbit_partition(group, ell)?.len();
    assert_eq!(
        avg,
        BigInt::from(direct),
        "averaged and direct orbit counts must agree"
    );
    Ok(avg)
}

/// The three routes to the orbit generating function, returned in order:
/// averaged per(I + tX) by the cycle-product formula, the cycle index
/// evaluated at z_l = 1 + t^l, and the direct orbit count series
/// sum_l #orbits t^l. All three must be equal; the caller asserts it.
pub fn molien_check(group: &GroupClosure) -> Result<(UniPoly, UniPoly, UniPoly)> {
    let n = group.n;

    // route 1: per-element product formula, summed then divided by |G|
    let mut sum = UniPoly::zero();
    for p in &group.elements {
        sum = &sum + &per_i_plus_tx(p);
    }
    let averaged = exact_div(&sum, group.order());

    // route 2: cycle index substitution z_l = 1 + t^l
    let zi = cycle_index(group);
    let substituted = zi.substitute(|len| {
        let mut coeffs = vec![BigInt::zero(); len + 1];
        coeffs[0] = BigInt::from(1);
        coeffs[len] = BigInt::from(1);
        UniPoly::from_coeffs(coeffs)
    });

    // route 3: direct orbit counts per level
    let mut counts = Vec::with_capacity(n + 1);
    for ell in 0..=n {
        counts.push(BigInt::from(orbit_partition(group, ell)?.len()));
    }
    let series = UniPoly::from_coeffs(counts);

    Ok((averaged, substituted, series))
}
