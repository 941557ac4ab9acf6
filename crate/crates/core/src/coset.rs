//! Todd–Coxeter coset enumeration.
//!
//! The working table is a flat `Vec<u32>` with one row per coset and one
//! column per letter (`2g` for a generator, `2g + 1` for its inverse). Row 0 is
//! a sentinel and the value 0 means "undefined". Coincidences are resolved
//! immediately with a union-find forest whose roots are the live cosets; a
//! dead coset always points at a smaller one, so coset 1 never dies.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{Letter, Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 10_000_000;
pub const MAX_COSETS_ENV: &str = "CYC4_MAX_COSETS";

/// Coset limit from an explicit flag, then the environment, then the default.
pub fn resolve_max_cosets(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(MAX_COSETS_ENV).ok().and_then(|v| v.trim().parse().ok()))
        .unwrap_or(DEFAULT_MAX_COSETS)
}

/// How new cosets are defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Relator-based filling (Haselgrove–Leech–Trotter) with lookahead when space runs short.
    Hlt,
    /// Define the first undefined entry, then process all consequences before the next definition.
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnumerationOptions {
    /// Maximum number of simultaneously allocated coset rows.
    pub max_cosets: usize,
    pub strategy: Strategy,
    /// Fraction of `max_cosets` above which an HLT run tries a lookahead pass before giving up space.
    pub lookahead_at: f64,
    /// Felsch only: relators longer than this are left out of deduction processing and
    /// enforced by the closing scans instead. Suits long relators expected to be consequences.
    pub deduction_cutoff: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_cosets: DEFAULT_MAX_COSETS,
            strategy: Strategy::Hlt,
            lookahead_at: 0.75,
            deduction_cutoff: None,
        }
    }
}

impl EnumerationOptions {
    pub fn with_max_cosets(max_cosets: usize) -> Self {
        EnumerationOptions { max_cosets, ..Default::default() }
    }

    pub fn felsch(max_cosets: usize) -> Self {
        EnumerationOptions { max_cosets, strategy: Strategy::Felsch, ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub defined: u64,
    pub max_live: u32,
    pub coincidences: u64,
    pub lookaheads: u32,
    pub compactions: u32,
}

/// Result of an enumeration: a complete table or an overflow at the coset limit.
#[derive(Debug, Clone)]
pub enum Enumeration {
    Complete(CosetTable),
    Overflow { limit: usize, stats: EnumerationStats },
}

impl Enumeration {
    pub fn index(&self) -> Option<u64> {
        match self {
            Enumeration::Complete(t) => Some(t.index() as u64),
            Enumeration::Overflow { .. } => None,
        }
    }

    pub fn table(self) -> Result<CosetTable> {
        match self {
            Enumeration::Complete(t) => Ok(t),
            Enumeration::Overflow { limit, .. } => Err(Error::Overflow(limit)),
        }
    }

    pub fn stats(&self) -> EnumerationStats {
        match self {
            Enumeration::Complete(t) => t.stats,
            Enumeration::Overflow { stats, .. } => *stats,
        }
    }
}

/// A complete, standardized coset table. Cosets are numbered from 1 in
/// breadth-first discovery order along positive generators; coset 1 is the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    index: u32,
    data: Vec<u32>,
    pub stats: EnumerationStats,
}

impl CosetTable {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn columns(&self) -> usize {
        2 * self.generators
    }

    /// Image of `coset` under one letter.
    pub fn act(&self, coset: u32, letter: Letter) -> Result<u32> {
        if coset == 0 || coset > self.index {
            return Err(Error::CosetOutOfRange(coset, self.index));
        }
        if letter.gen as usize >= self.generators {
            return Err(Error::GeneratorOutOfRange(letter.gen as usize, self.generators));
        }
        Ok(self.entry(coset, letter.column()))
    }

    fn entry(&self, coset: u32, col: usize) -> u32 {
        self.data[(coset as usize - 1) * self.columns() + col]
    }

    /// Image of `start` under the right action of `w`.
    pub fn trace(&self, start: u32, w: &Word) -> Result<u32> {
        let mut c = start;
        if c == 0 || c > self.index {
            return Err(Error::CosetOutOfRange(c, self.index));
        }
        for &x in w.letters() {
            c = self.act(c, x)?;
        }
        Ok(c)
    }

    /// Full check: mutually inverse columns, relator closure at every coset,
    /// subgroup closure at coset 1.
    pub fn validate(&self, p: &Presentation, subgroup: &[Word]) -> bool {
        if p.generator_count() != self.generators {
            return false;
        }
        for c in 1..=self.index {
            for col in 0..self.columns() {
                let d = self.entry(c, col);
                if d == 0 || d > self.index || self.entry(d, col ^ 1) != c {
                    return false;
                }
            }
        }
        p.relators.iter().all(|r| self.fixes_every_coset(r)) && subgroup.iter().all(|w| self.trace(1, w) == Ok(1))
    }

    /// Pushes all cosets through `w` one letter at a time; independent lookups
    /// run much faster than one dependent chain per coset on large tables.
    fn fixes_every_coset(&self, w: &Word) -> bool {
        let mut images: Vec<u32> = (1..=self.index).collect();
        for x in w.letters() {
            let col = x.column();
            for c in images.iter_mut() {
                *c = self.entry(*c, col);
            }
        }
        images.iter().zip(1..).all(|(&img, c)| img == c)
    }

    /// The permutation induced by a generator, as a 1-based image list (index 0 unused).
    pub fn permutation(&self, gen: u32) -> Result<Vec<u32>> {
        if gen as usize >= self.generators {
            return Err(Error::GeneratorOutOfRange(gen as usize, self.generators));
        }
        let col = Letter::pos(gen).column();
        Ok(std::iter::once(0).chain((1..=self.index).map(|c| self.entry(c, col))).collect())
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
pub fn coset_enumerate(p: &Presentation, subgroup: &[Word], opts: &EnumerationOptions) -> Result<Enumeration> {
    for w in subgroup {
        p.check_word(w)?;
    }
    if opts.max_cosets == 0 {
        return Err(Error::Overflow(0));
    }
    let subgroup: Vec<Word> = subgroup.iter().map(Word::reduced).filter(|w| !w.is_empty()).collect();
    let mut e = Enumerator::new(&p.with_reduced_powers(), &subgroup, opts);
    match e.run() {
        Ok(()) => {
            let table = e.into_table();
            if !table.validate(p, &subgroup) {
                return Err(Error::IncompleteTable);
            }
            Ok(Enumeration::Complete(table))
        }
        Err(Overflow) => Ok(Enumeration::Overflow { limit: opts.max_cosets, stats: e.stats }),
    }
}

/// Order of the group (index of the trivial subgroup), or `None` on overflow.
pub fn group_order(p: &Presentation, max_cosets: usize) -> Result<Option<u64>> {
    Ok(coset_enumerate(p, &[], &EnumerationOptions::with_max_cosets(max_cosets))?.index())
}

/// Index of `⟨subgroup⟩`, or `None` on overflow.
pub fn subgroup_index(p: &Presentation, subgroup: &[Word], opts: &EnumerationOptions) -> Result<Option<u64>> {
    Ok(coset_enumerate(p, subgroup, opts)?.index())
}

struct Overflow;

type Step<T> = std::result::Result<T, Overflow>;

struct Enumerator {
    generators: usize,
    cols: usize,
    relators: Vec<Vec<u32>>,
    subgroup: Vec<Vec<u32>>,
    /// Cyclic conjugates of relators and their inverses, grouped by first letter (Felsch only).
    conjugates: Vec<Vec<Vec<u32>>>,
    strategy: Strategy,
    lookahead_at: f64,
    table: Vec<u32>,
    parent: Vec<u32>,
    next: u32,
    limit: u32,
    live: u32,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    /// Rows that must be free before a scan-and-fill or a row completion.
    headroom: u32,
    changed: bool,
    stats: EnumerationStats,
}

fn columns_of(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|x| x.column() as u32).collect()
}

impl Enumerator {
    fn new(p: &Presentation, subgroup: &[Word], opts: &EnumerationOptions) -> Self {
        let generators = p.generator_count();
        let cols = 2 * generators;
        let relators: Vec<Vec<u32>> = p.relators.iter().map(columns_of).collect();
        let subgroup: Vec<Vec<u32>> = subgroup.iter().map(columns_of).collect();
        let mut conjugates = vec![Vec::new(); cols];
        if opts.strategy == Strategy::Felsch {
            let mut seen = std::collections::HashSet::new();
            let cutoff = opts.deduction_cutoff.unwrap_or(usize::MAX);
            for r in p.relators.iter().filter(|r| r.len() <= cutoff) {
                for w in [r.clone(), r.inverse()] {
                    let cw = columns_of(&w);
                    for s in 0..cw.len() {
                        let rot: Vec<u32> = cw[s..].iter().chain(&cw[..s]).copied().collect();
                        if seen.insert(rot.clone()) {
                            conjugates[rot[0] as usize].push(rot);
                        }
                    }
                }
            }
        }
        let longest = relators.iter().chain(&subgroup).map(Vec::len).max().unwrap_or(0);
        let limit = opts.max_cosets.min(u32::MAX as usize - 1) as u32;
        let mut e = Enumerator {
            generators,
            cols,
            relators,
            subgroup,
            conjugates,
            strategy: opts.strategy,
            lookahead_at: opts.lookahead_at,
            table: vec![0; 2 * cols],
            parent: vec![0, 1],
            next: 2,
            limit,
            live: 1,
            queue: Vec::new(),
            deductions: Vec::new(),
            headroom: longest.max(cols).max(1) as u32,
            changed: false,
            stats: EnumerationStats { max_live: 1, ..Default::default() },
        };
        e.parent[1] = 1;
        e
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.cols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, d: u32) {
        self.table[c as usize * self.cols + x as usize] = d;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn room(&self) -> u32 {
        self.limit + 1 - self.next
    }

    /// Links `c·x = d` and `d·x⁻¹ = c`.
    fn link(&mut self, c: u32, x: u32, d: u32) {
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.changed = true;
        if self.strategy == Strategy::Felsch {
            self.deductions.push((c, x));
        }
    }

    fn define(&mut self, c: u32, x: u32) {
        let d = self.next;
        self.next += 1;
        let need = (d as usize + 1) * self.cols;
        if self.table.len() < need {
            let grown = (self.table.len() * 2).max(need).min((self.limit as usize + 1) * self.cols);
            self.table.resize(grown, 0);
            self.parent.resize(grown / self.cols, 0);
        }
        self.table[d as usize * self.cols..(d as usize + 1) * self.cols].fill(0);
        self.parent[d as usize] = d;
        self.live += 1;
        self.stats.defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        self.link(c, x, d);
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let up = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = up;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push(hi);
        self.live -= 1;
        self.stats.coincidences += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        if a == b {
            return;
        }
        self.changed = true;
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.cols as u32 {
                let d = self.get(dead, x);
                if d == 0 {
                    continue;
                }
                let xi = x ^ 1;
                self.set(d, xi, 0);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != 0 {
                    self.merge(nu, mx);
                } else {
                    let nxi = self.get(nu, xi);
                    if nxi != 0 {
                        self.merge(mu, nxi);
                    } else {
                        self.link(mu, x, nu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Traces `r` from `c` in both directions, defining new cosets where the
    /// two ends fail to meet. The caller guarantees `|r|` free rows.
    fn scan_and_fill(&mut self, c: u32, r: &[u32]) {
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = r.len() as isize - 1;
        loop {
            while i <= j {
                let nf = self.get(f, r[i as usize]);
                if nf == 0 {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i > j {
                self.coincidence(f, b);
                return;
            }
            while j >= i {
                let nb = self.get(b, r[j as usize] ^ 1);
                if nb == 0 {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return;
            }
            if i == j {
                self.link(f, r[i as usize], b);
                return;
            }
            self.define(f, r[i as usize]);
        }
    }

    /// Like `scan_and_fill` but never defines cosets; it only records deductions and coincidences.
    fn scan(&mut self, c: u32, r: &[u32]) {
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = r.len() as isize - 1;
        while i <= j {
            let nf = self.get(f, r[i as usize]);
            if nf == 0 {
                break;
            }
            f = nf;
            i += 1;
        }
        if i > j {
            self.coincidence(f, b);
            return;
        }
        while j >= i {
            let nb = self.get(b, r[j as usize] ^ 1);
            if nb == 0 {
                break;
            }
            b = nb;
            j -= 1;
        }
        if j < i {
            self.coincidence(f, b);
        } else if i == j {
            self.link(f, r[i as usize], b);
        }
    }

    /// Renumbers live cosets consecutively, preserving order. Returns the old-to-new map (0 = dead).
    fn compact(&mut self) -> Vec<u32> {
        self.stats.compactions += 1;
        let mut map = vec![0u32; self.next as usize];
        let mut fresh = 0u32;
        for c in 1..self.next {
            if self.is_live(c) {
                fresh += 1;
                map[c as usize] = fresh;
            }
        }
        let cols = self.cols;
        for c in 1..self.next as usize {
            let nc = map[c] as usize;
            if nc == 0 {
                continue;
            }
            for x in 0..cols {
                let d = self.table[c * cols + x];
                debug_assert!(d == 0 || map[d as usize] != 0);
                self.table[nc * cols + x] = map[d as usize];
            }
            self.parent[nc] = nc as u32;
        }
        self.next = fresh + 1;
        self.deductions.clear();
        map
    }

    fn remap(map: &[u32], next: u32, c: u32) -> u32 {
        map.iter().skip(c as usize).find(|&&m| m != 0).copied().unwrap_or(next)
    }

    fn lookahead(&mut self) {
        self.stats.lookaheads += 1;
        for c in 1..self.next {
            for ri in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let r = std::mem::take(&mut self.relators[ri]);
                self.scan(c, &r);
                self.relators[ri] = r;
            }
        }
    }

    /// Frees rows for more definitions, resuming at the returned coset.
    fn make_room(&mut self, c: u32) -> Step<u32> {
        let mut c = c;
        if self.live + 1 < self.next {
            let map = self.compact();
            c = Self::remap(&map, self.next, c);
        }
        let crowded = self.live as f64 >= self.lookahead_at * self.limit as f64;
        if self.strategy == Strategy::Hlt && (self.room() < self.headroom || crowded) {
            self.lookahead();
            if self.live + 1 < self.next {
                let map = self.compact();
                c = Self::remap(&map, self.next, c);
            }
        }
        if self.room() < self.headroom {
            return Err(Overflow);
        }
        Ok(c)
    }

    fn fill_subgroup(&mut self) -> Step<()> {
        for si in 0..self.subgroup.len() {
            if self.room() < self.headroom {
                self.make_room(1)?;
            }
            let w = std::mem::take(&mut self.subgroup[si]);
            self.scan_and_fill(1, &w);
            self.subgroup[si] = w;
        }
        Ok(())
    }

    fn hlt_pass(&mut self) -> Step<()> {
        let mut c = 1;
        'cosets: while c < self.next {
            if self.is_live(c) {
                for ri in 0..self.relators.len() {
                    if self.room() < self.headroom {
                        c = self.make_room(c)?;
                        continue 'cosets;
                    }
                    let r = std::mem::take(&mut self.relators[ri]);
                    self.scan_and_fill(c, &r);
                    self.relators[ri] = r;
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for x in 0..self.cols as u32 {
                        if self.get(c, x) == 0 {
                            if self.room() == 0 {
                                c = self.make_room(c)?;
                                continue 'cosets;
                            }
                            self.define(c, x);
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let group = std::mem::take(&mut self.conjugates[x as usize]);
            for r in &group {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r);
            }
            self.conjugates[x as usize] = group;
        }
    }

    fn felsch_pass(&mut self) -> Step<()> {
        let mut c = 1u32;
        loop {
            self.process_deductions();
            let mut hole = None;
            while c < self.next {
                if self.is_live(c) {
                    if let Some(x) = (0..self.cols as u32).find(|&x| self.get(c, x) == 0) {
                        hole = Some(x);
                        break;
                    }
                }
                c += 1;
            }
            let Some(x) = hole else { return Ok(()) };
            if self.room() == 0 {
                if self.live + 1 < self.next {
                    let map = self.compact();
                    c = Self::remap(&map, self.next, c);
                    continue;
                }
                return Err(Overflow);
            }
            self.define(c, x);
        }
    }

    /// On a complete table: every relator, traced from every live coset, returns to it.
    fn closes_everywhere(&self) -> bool {
        let live: Vec<u32> = (1..self.next).filter(|&c| self.is_live(c)).collect();
        self.relators.iter().all(|r| {
            let mut images = live.clone();
            for &x in r {
                for c in images.iter_mut() {
                    *c = self.get(*c, x);
                }
            }
            images == live
        })
    }

    fn holes(&self) -> bool {
        (1..self.next).any(|c| self.is_live(c) && (0..self.cols as u32).any(|x| self.get(c, x) == 0))
    }

    fn run(&mut self) -> Step<()> {
        self.fill_subgroup()?;
        if self.strategy == Strategy::Felsch {
            self.process_deductions();
        }
        loop {
            match self.strategy {
                Strategy::Hlt => self.hlt_pass()?,
                Strategy::Felsch => self.felsch_pass()?,
            }
            if !self.holes() && self.closes_everywhere() {
                return Ok(());
            }
            // A closing scan of every relator at every coset, resolving what the check found.
            self.changed = false;
            self.lookahead();
            self.stats.lookaheads -= 1;
            if !self.changed && !self.holes() {
                return Ok(());
            }
        }
    }

    /// Renumbers by breadth-first discovery from coset 1 along positive generators.
    fn into_table(mut self) -> CosetTable {
        if self.live + 1 < self.next {
            self.compact();
        }
        let n = self.live as usize;
        let cols = self.cols;
        let mut order = vec![0u32; n + 1];
        let mut seen = 0u32;
        let mut queue = VecDeque::with_capacity(n);
        order[1] = 1;
        seen += 1;
        queue.push_back(1u32);
        // Every column of a complete finite table is a permutation, so positive letters reach all cosets.
        while let Some(c) = queue.pop_front() {
            for x in (0..cols).step_by(2) {
                let d = self.table[c as usize * cols + x];
                if order[d as usize] == 0 {
                    seen += 1;
                    order[d as usize] = seen;
                    queue.push_back(d);
                }
            }
        }
        let mut data = vec![0u32; n * cols];
        for c in 1..=n {
            let nc = order[c] as usize;
            for x in 0..cols {
                data[(nc - 1) * cols + x] = order[self.table[c * cols + x] as usize];
            }
        }
        CosetTable { generators: self.generators, index: n as u32, data, stats: self.stats }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(names: &[&str], rels: &[Vec<(u32, i64)>]) -> Presentation {
        Presentation::from_syllables(names, rels).unwrap()
    }

    fn both(p: &Presentation, sub: &[Word]) -> (Option<u64>, Option<u64>) {
        let h = coset_enumerate(p, sub, &EnumerationOptions::with_max_cosets(1_000_000)).unwrap().index();
        let f = coset_enumerate(p, sub, &EnumerationOptions::felsch(1_000_000)).unwrap().index();
        (h, f)
    }

    #[test]
    fn cyclic_group_and_standard_numbering() {
        let p = pres(&["a"], &[vec![(0, 6)]]);
        let t = coset_enumerate(&p, &[], &EnumerationOptions::default()).unwrap().table().unwrap();
        assert_eq!(t.index(), 6);
        let a = Word::power(0, 1);
        assert_eq!(t.trace(1, &a), Ok(2));
        assert_eq!(t.trace(1, &Word::power(0, 2)), Ok(3));
        assert_eq!(t.trace(4, &Word::empty()), Ok(4));
        assert_eq!(t.trace(7, &a), Err(Error::CosetOutOfRange(7, 6)));
    }

    #[test]
    fn trivial_group() {
        let p = pres(&["a"], &[vec![(0, 1)]]);
        assert_eq!(group_order(&p, 10).unwrap(), Some(1));
    }

    #[test]
    fn small_groups_both_strategies() {
        // S3 as ⟨a,b | a², b³, (ab)²⟩
        let s3 = pres(&["a", "b"], &[vec![(0, 2)], vec![(1, 3)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]);
        assert_eq!(both(&s3, &[]), (Some(6), Some(6)));
        assert_eq!(both(&s3, &[Word::power(1, 1)]), (Some(2), Some(2)));
        // Z4 × Z2-style abelian group
        let ab = pres(&["a", "x"], &[vec![(0, 4)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, -1), (1, -1)]]);
        assert_eq!(both(&ab, &[]), (Some(8), Some(8)));
        // A5 as the (2,3,5) triangle group
        let a5 = pres(&["a", "b"], &[vec![(0, 2)], vec![(1, 3)], [(0, 1), (1, 1)].repeat(5)]);
        assert_eq!(both(&a5, &[]), (Some(60), Some(60)));
    }

    #[test]
    fn metacyclic_orders() {
        let j4 = pres(&["t", "y"], &[vec![(0, 4)], vec![(1, 3), (0, 2), (1, 1), (0, 1)]]);
        assert_eq!(both(&j4, &[]), (Some(272), Some(272)));
        let k = pres(&["t", "u"], &[vec![(0, 5)], vec![(1, 3), (0, 2), (1, 1), (0, 1)]]);
        assert_eq!(both(&k, &[]), (Some(1100), Some(1100)));
    }

    #[test]
    fn long_relators_outside_deductions() {
        // A5 as <a, b | a^2, b^3, (ab)^5>; the extra relators are long.
        let base = vec![vec![(0, 2)], vec![(1, 3)], [(0, 1), (1, 1)].repeat(5)];
        let ab5 = [(0, 1), (1, 1)].repeat(5);
        let ba5: Vec<(u32, i64)> = [(1, -1), (0, -1)].repeat(5);
        let consequence = [vec![(0, -1)], ba5, vec![(0, 1)], ab5.clone()].concat();
        let collapsing = [ab5, vec![(0, 1)]].concat();
        for (extra, order) in [(consequence, 60), (collapsing, 1)] {
            let p = pres(&["a", "b"], &[base.clone(), vec![extra]].concat());
            let cut = EnumerationOptions { deduction_cutoff: Some(10), ..EnumerationOptions::felsch(10_000) };
            assert_eq!(coset_enumerate(&p, &[], &cut).unwrap().index(), Some(order));
            assert_eq!(coset_enumerate(&p, &[], &EnumerationOptions::felsch(10_000)).unwrap().index(), Some(order));
        }
    }

    #[test]
    fn overflow_is_a_value() {
        // Free group on one generator is infinite.
        let p = pres(&["a", "b"], &[vec![(1, 1)]]);
        let e = coset_enumerate(&p, &[], &EnumerationOptions::with_max_cosets(100)).unwrap();
        assert!(matches!(e, Enumeration::Overflow { limit: 100, .. }));
        let e = coset_enumerate(&p, &[], &EnumerationOptions::felsch(100)).unwrap();
        assert!(e.index().is_none());
    }

    #[test]
    fn tight_limit_forces_compaction() {
        let k = pres(&["t", "u"], &[vec![(0, 5)], vec![(1, 3), (0, 2), (1, 1), (0, 1)]]);
        let mut found = None;
        for limit in [1100, 1200, 1500, 2000, 4000] {
            if let Some(i) = subgroup_index(&k, &[], &EnumerationOptions::with_max_cosets(limit)).unwrap() {
                found = Some(i);
                break;
            }
        }
        assert_eq!(found, Some(1100));
    }

    #[test]
    fn deterministic() {
        let j4 = pres(&["t", "y"], &[vec![(0, 4)], vec![(1, 3), (0, 2), (1, 1), (0, 1)]]);
        let a = coset_enumerate(&j4, &[], &EnumerationOptions::default()).unwrap().table().unwrap();
        let b = coset_enumerate(&j4, &[], &EnumerationOptions::default()).unwrap().table().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn env_precedence() {
        assert_eq!(resolve_max_cosets(Some(5)), 5);
    }
}
