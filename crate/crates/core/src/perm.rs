//! Permutations of `{0, .., n-1}`, printed in 1-based cycle notation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// A permutation stored as its image vector: `i ↦ self.0[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation of 1..{0}")]
    NotBijective(usize),
    #[error("bad cycle notation: {0}")]
    Syntax(String),
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijective(n));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `n` points from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                if i >= n || used[i] {
                    return Err(PermError::NotBijective(n));
                }
                used[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm(images))
    }

    /// Parses 1-based cycle notation such as `(123)(45)`, `(1,2)(10,11)`
    /// or `id`.
    pub fn parse(n: usize, text: &str) -> Result<Self, PermError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "id" || t == "()" {
            return Ok(Perm::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| PermError::Syntax(text.to_string()))?;
            let points: Vec<usize> = if body.0.contains(',') {
                body.0
                    .split(',')
                    .map(|p| p.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| PermError::Syntax(text.to_string()))?
            } else {
                body.0
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| PermError::Syntax(text.to_string()))?
            };
            if points.contains(&0) {
                return Err(PermError::Syntax(text.to_string()));
            }
            cycles.push(points.into_iter().map(|p| p - 1).collect());
            rest = body.1;
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Lexicographic successor of the image vector.
    pub fn next_lex(&self) -> Option<Perm> {
        let mut v = self.0.clone();
        let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])?;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1])?;
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Perm(v))
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        std::iter::successors(Some(Perm::identity(n)), Perm::next_lex)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        let sep = if self.0.len() >= 10 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

/// The subgroup generated by `gens`, sorted.
pub fn closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut group: BTreeSet<Perm> = BTreeSet::from([Perm::identity(n)]);
    let mut queue: VecDeque<Perm> = VecDeque::from([Perm::identity(n)]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if group.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    group.into_iter().collect()
}

/// The commutator subgroup `[H, H]` of a finite group given as a list.
pub fn commutator_subgroup(n: usize, group: &[Perm]) -> Vec<Perm> {
    let mut comms = BTreeSet::new();
    for g in group {
        let gi = g.inverse();
        for h in group {
            let hi = h.inverse();
            comms.insert(g.compose(h).compose(&gi).compose(&hi));
        }
    }
    closure(n, &comms.into_iter().collect::<Vec<_>>())
}

pub fn is_perfect(n: usize, group: &[Perm]) -> bool {
    commutator_subgroup(n, group).len() == group.len()
}
