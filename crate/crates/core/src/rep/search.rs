//! Backtracking search for `SL(2, F_p)` representations.
//!
//! The first generator ranges over one representative per conjugacy class,
//! which quotients out global conjugation. The remaining generators follow
//! a fixed plan: at each step the next generator is the one that can be
//! solved for directly from a relation, or failing that the one completing
//! the most relations. Relations are checked as soon as their support is
//! assigned.

use std::cmp::Reverse;

use crate::algebra::{is_prime, Field, FieldMatrix};
use crate::group::Presentation;
use crate::par::{self, Execution};

use super::{RepError, Representation};

/// Largest prime accepted by the search (the whole group is tabulated).
pub const MAX_SEARCH_PRIME: u64 = 97;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub prime: u64,
    /// Keep at most this many results (after sorting).
    pub limit: Option<usize>,
    /// Every generator has trace 2 and is not the identity.
    pub parabolic: bool,
    /// Every generator has this trace (taken mod p).
    pub trace: Option<u64>,
    /// Drop representations whose images all commute.
    pub noncommutative_only: bool,
    pub execution: Execution,
}

impl SearchOptions {
    pub fn new(prime: u64) -> Self {
        SearchOptions {
            prime,
            limit: None,
            parabolic: false,
            trace: None,
            noncommutative_only: true,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Sorted by flattened matrix entries, generator by generator.
    pub representations: Vec<Representation>,
    /// Number found before applying the limit.
    pub total: usize,
    pub truncated: bool,
}

/// Row-major `[a, b, c, d]` with entries in `0..p`.
type M2 = [u32; 4];

const IDENTITY: M2 = [1, 0, 0, 1];

#[derive(Clone, Copy)]
struct Zp(u32);

impl Zp {
    fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        // a^(p-2)
        let (mut acc, mut base, mut e) = (1u32, a, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn mat_mul(self, x: &M2, y: &M2) -> M2 {
        [
            self.add(self.mul(x[0], y[0]), self.mul(x[1], y[2])),
            self.add(self.mul(x[0], y[1]), self.mul(x[1], y[3])),
            self.add(self.mul(x[2], y[0]), self.mul(x[3], y[2])),
            self.add(self.mul(x[2], y[1]), self.mul(x[3], y[3])),
        ]
    }

    /// Inverse of a determinant-one matrix.
    fn mat_inv(self, x: &M2) -> M2 {
        [x[3], self.neg(x[1]), self.neg(x[2]), x[0]]
    }

    fn trace(self, x: &M2) -> u32 {
        self.add(x[0], x[3])
    }
}

/// All of `SL(2, F_p)` in lexicographic order.
fn sl2_elements(f: Zp) -> Vec<M2> {
    let p = f.0;
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if a != 0 {
                    // d = (1 + bc) / a
                    let d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
                    out.push([a, b, c, d]);
                } else if f.mul(b, c) == p - 1 {
                    for d in 0..p {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn class_reps(f: Zp) -> Vec<M2> {
    let p = f.0;
    let minus = p - 1;
    let squares: Vec<bool> = {
        let mut s = vec![false; p as usize];
        for x in 0..p {
            s[f.mul(x, x) as usize] = true;
        }
        s
    };
    let non_square = (1..p).find(|&v| !squares[v as usize]);
    let mut reps = vec![IDENTITY];
    if minus != 1 {
        reps.push([minus, 0, 0, minus]);
    }
    let signs: &[u32] = if minus == 1 { &[1] } else { &[1, minus] };
    for &s in signs {
        reps.push([s, 1, 0, s]);
        if let Some(nu) = non_square {
            reps.push([s, nu, 0, s]);
        }
    }
    // split semisimple: diag(λ, λ⁻¹), one per unordered pair
    for l in 2..p {
        let li = f.inv(l);
        if l < li {
            reps.push([l, 0, 0, li]);
        }
    }
    // elliptic: companion matrix of an irreducible x^2 - τx + 1
    for tau in 0..p {
        let has_root = (0..p).any(|x| f.add(f.add(f.mul(x, x), f.neg(f.mul(tau, x))), 1) == 0);
        if !has_root {
            reps.push([0, minus, 1, tau]);
        }
    }
    reps
}

fn check_prime(p: u64) -> Result<Zp, RepError> {
    if !is_prime(p) || p > MAX_SEARCH_PRIME {
        return Err(RepError::InvalidSearch(format!("{p} is not a prime at most {MAX_SEARCH_PRIME}")));
    }
    Ok(Zp(p as u32))
}

fn to_field_matrix(field: &Field, m: &M2) -> FieldMatrix {
    let e = |i: usize| m[i] as i64;
    FieldMatrix::from_ints(field, &[&[e(0), e(1)], &[e(2), e(3)]])
}

/// One representative per conjugacy class of `SL(2, F_p)`: `±I`, the
/// scaled Jordan blocks, `diag(λ, λ⁻¹)` and companion matrices of
/// irreducible characteristic polynomials.
pub fn sl2_class_representatives(p: u64) -> Result<Vec<FieldMatrix>, RepError> {
    let f = check_prime(p)?;
    let field = Field::prime(p)?;
    Ok(class_reps(f).iter().map(|m| to_field_matrix(&field, m)).collect())
}

/// Relator as `(generator, inverse)` letters.
type Relator = Vec<(usize, bool)>;

struct Step {
    generator: usize,
    /// Relation and letter position from which the generator is solved.
    solve: Option<(usize, usize)>,
    /// Relations whose support becomes fully assigned at this step.
    checks: Vec<usize>,
}

fn plan(rank: usize, relators: &[Relator]) -> Vec<Step> {
    let support: Vec<Vec<usize>> = relators
        .iter()
        .map(|r| {
            let mut s: Vec<usize> = r.iter().map(|l| l.0).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let mut assigned = vec![false; rank];
    let mut checked = vec![false; relators.len()];
    let mut steps = Vec::with_capacity(rank);
    let completes = |assigned: &[bool], g: usize, r: usize| support[r].iter().all(|&h| h == g || assigned[h]);

    for step in 0..rank {
        let generator = if step == 0 {
            0
        } else {
            (0..rank)
                .filter(|&g| !assigned[g])
                .max_by_key(|&g| {
                    let pending = (0..relators.len()).filter(|&r| !checked[r] && completes(&assigned, g, r));
                    let solvable = pending.clone().any(|r| relators[r].iter().filter(|l| l.0 == g).count() == 1);
                    let appearances: usize = relators.iter().map(|r| r.iter().filter(|l| l.0 == g).count()).sum();
                    (solvable, pending.count(), appearances, Reverse(g))
                })
                .expect("an unassigned generator remains")
        };
        let pending: Vec<usize> =
            (0..relators.len()).filter(|&r| !checked[r] && completes(&assigned, generator, r)).collect();
        let solve = if step == 0 {
            None
        } else {
            pending.iter().find_map(|&r| {
                let hits: Vec<usize> =
                    relators[r].iter().enumerate().filter(|(_, l)| l.0 == generator).map(|(i, _)| i).collect();
                (hits.len() == 1).then(|| (r, hits[0]))
            })
        };
        let checks = pending.iter().copied().filter(|&r| solve.map(|s| s.0) != Some(r)).collect();
        for &r in &pending {
            checked[r] = true;
        }
        assigned[generator] = true;
        steps.push(Step { generator, solve, checks });
    }
    steps
}

struct Search<'a> {
    f: Zp,
    relators: &'a [Relator],
    steps: &'a [Step],
    candidates: &'a [M2],
    allowed: &'a (dyn Fn(&M2) -> bool + Sync),
    noncommutative_only: bool,
}

impl Search<'_> {
    fn product(&self, letters: &[(usize, bool)], images: &[M2], inverses: &[M2]) -> M2 {
        letters
            .iter()
            .fold(IDENTITY, |acc, &(g, inv)| self.f.mat_mul(&acc, if inv { &inverses[g] } else { &images[g] }))
    }

    fn holds(&self, r: usize, images: &[M2], inverses: &[M2]) -> bool {
        self.product(&self.relators[r], images, inverses) == IDENTITY
    }

    fn noncommutative(&self, images: &[M2]) -> bool {
        let n = images.len();
        (0..n).any(|i| {
            (i + 1..n).any(|j| self.f.mat_mul(&images[i], &images[j]) != self.f.mat_mul(&images[j], &images[i]))
        })
    }

    fn assign(&self, depth: usize, m: M2, images: &mut [M2], inverses: &mut [M2], out: &mut Vec<Vec<M2>>) {
        let step = &self.steps[depth];
        images[step.generator] = m;
        inverses[step.generator] = self.f.mat_inv(&m);
        if step.checks.iter().all(|&r| self.holds(r, images, inverses)) {
            self.descend(depth + 1, images, inverses, out);
        }
    }

    fn descend(&self, depth: usize, images: &mut [M2], inverses: &mut [M2], out: &mut Vec<Vec<M2>>) {
        let Some(step) = self.steps.get(depth) else {
            if !self.noncommutative_only || self.noncommutative(images) {
                out.push(images.to_vec());
            }
            return;
        };
        match step.solve {
            Some((r, pos)) => {
                let letters = &self.relators[r];
                let a = self.product(&letters[..pos], images, inverses);
                let b = self.product(&letters[pos + 1..], images, inverses);
                // a·g·b = 1 gives g = (ba)⁻¹; a·g⁻¹·b = 1 gives g = ba
                let ba = self.f.mat_mul(&b, &a);
                let m = if letters[pos].1 { ba } else { self.f.mat_inv(&ba) };
                if (self.allowed)(&m) {
                    self.assign(depth, m, images, inverses, out);
                }
            }
            None => {
                for &m in self.candidates {
                    self.assign(depth, m, images, inverses, out);
                }
            }
        }
    }
}

/// All `SL(2, F_p)` representations of `p` up to conjugation of the first
/// generator, in a canonical order independent of the execution strategy.
pub fn find_representations(p: &Presentation, options: &SearchOptions) -> Result<SearchOutcome, RepError> {
    let f = check_prime(options.prime)?;
    let field = Field::prime(options.prime)?;
    let rank = p.rank();
    let relators: Vec<Relator> = p
        .relations()
        .iter()
        .map(|r| r.as_relator().letters().iter().map(|l| (l.generator, l.inverse)).collect())
        .collect();
    let trace = options.trace.map(|t| (t % options.prime) as u32);
    let allowed = |m: &M2| {
        (!options.parabolic || (f.trace(m) == f.add(1, 1) && *m != IDENTITY)) && trace.is_none_or(|t| f.trace(m) == t)
    };
    let candidates: Vec<M2> = sl2_elements(f).into_iter().filter(|m| allowed(m)).collect();
    let firsts: Vec<M2> = class_reps(f).into_iter().filter(|m| allowed(m)).collect();

    let found: Vec<Vec<M2>> = if rank == 0 {
        Vec::new()
    } else {
        let steps = plan(rank, &relators);
        let search = Search {
            f,
            relators: &relators,
            steps: &steps,
            candidates: &candidates,
            allowed: &allowed,
            noncommutative_only: options.noncommutative_only,
        };
        par::map(options.execution, &firsts, |&m| {
            let mut images = vec![IDENTITY; rank];
            let mut inverses = vec![IDENTITY; rank];
            let mut out = Vec::new();
            search.assign(0, m, &mut images, &mut inverses, &mut out);
            out
        })
        .into_iter()
        .flatten()
        .collect()
    };

    let mut found = found;
    found.sort_unstable();
    let total = found.len();
    let truncated = options.limit.is_some_and(|l| total > l);
    if let Some(l) = options.limit {
        found.truncate(l);
    }
    let representations = found
        .iter()
        .map(|images| {
            let mats = images.iter().map(|m| to_field_matrix(&field, m)).collect();
            Representation::new(&field, 2, mats).expect("SL(2) matrices are invertible")
        })
        .collect();
    Ok(SearchOutcome { representations, total, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_presentation;
    use crate::rep::Validation;

    /// Conjugacy classes of SL(2, F_p) by brute-force orbit computation.
    fn brute_force_class_count(p: u32) -> usize {
        let f = Zp(p);
        let all = sl2_elements(f);
        let mut seen = std::collections::HashSet::new();
        let mut classes = 0;
        for m in &all {
            if seen.contains(m) {
                continue;
            }
            classes += 1;
            for g in &all {
                seen.insert(f.mat_mul(&f.mat_mul(g, m), &f.mat_inv(g)));
            }
        }
        classes
    }

    fn conjugate(f: Zp, a: &M2, b: &M2) -> bool {
        sl2_elements(f).iter().any(|g| f.mat_mul(&f.mat_mul(g, a), &f.mat_inv(g)) == *b)
    }

    #[test]
    fn group_orders() {
        for p in [2u32, 3, 5, 7, 11] {
            assert_eq!(sl2_elements(Zp(p)).len() as u32, p * (p * p - 1));
        }
    }

    #[test]
    fn class_representatives_are_complete_and_distinct() {
        for p in [2u32, 3, 5, 7] {
            let f = Zp(p);
            let reps = class_reps(f);
            assert_eq!(reps.len(), brute_force_class_count(p), "p = {p}");
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    assert!(!conjugate(f, a, b), "p = {p}: {a:?} ~ {b:?}");
                }
            }
        }
    }

    #[test]
    fn free_group_of_rank_one() {
        // ⟨x | ⟩: one representation per class
        let p = parse_presentation("gens x\n").unwrap();
        let options = SearchOptions { noncommutative_only: false, ..SearchOptions::new(5) };
        let out = find_representations(&p, &options).unwrap();
        assert_eq!(out.total, brute_force_class_count(5));
        assert_eq!(out.total, 9);
        let noncommutative = find_representations(&p, &SearchOptions::new(5)).unwrap();
        assert_eq!(noncommutative.total, 0);
    }

    #[test]
    fn figure_eight_parabolic_f7() {
        let p = parse_presentation("gens x y\nrel x^-1 y x y^-1 = y x^-1 y x y^-1 x^-1\n").unwrap();
        let options = SearchOptions { parabolic: true, ..SearchOptions::new(7) };
        let out = find_representations(&p, &options).unwrap();
        assert!(!out.truncated);
        let field = Field::prime(7).unwrap();
        let x = FieldMatrix::from_ints(&field, &[&[1, 1], &[0, 1]]);
        let y = FieldMatrix::from_ints(&field, &[&[1, 0], &[5, 1]]);
        assert!(out.representations.iter().any(|r| r.images() == [x.clone(), y.clone()]));
        for r in &out.representations {
            assert_eq!(r.validate(&p).unwrap(), Validation::Valid);
            assert!(r.is_noncommutative());
        }
        let seq = find_representations(&p, &SearchOptions { execution: Execution::Sequential, ..options.clone() });
        assert_eq!(seq.unwrap(), out);
        let limited = find_representations(&p, &SearchOptions { limit: Some(1), ..options }).unwrap();
        assert!(limited.truncated);
        assert_eq!(limited.representations[..], out.representations[..1]);
    }

    #[test]
    fn solved_generators_respect_filters() {
        // y is solved from y = x^2; trace 0 forces x^2 = -I, of trace 1 in F_3
        let p = parse_presentation("gens x y\nrel y = x^2\n").unwrap();
        let open = SearchOptions { noncommutative_only: false, ..SearchOptions::new(3) };
        let out = find_representations(&p, &open).unwrap();
        assert_eq!(out.total, class_reps(Zp(3)).len());
        for r in &out.representations {
            assert_eq!(r.image(1), &(r.image(0) * r.image(0)));
        }
        let filtered = find_representations(&p, &SearchOptions { trace: Some(0), ..open }).unwrap();
        assert_eq!(filtered.total, 0);
    }

    #[test]
    fn rejects_bad_primes() {
        let p = parse_presentation("gens x\n").unwrap();
        for q in [0, 1, 4, 101] {
            assert!(matches!(find_representations(&p, &SearchOptions::new(q)), Err(RepError::InvalidSearch(_))));
        }
    }
}
