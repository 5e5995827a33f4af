//! Tableau combinatorics.
//!
//! Tableaux follow the convention used throughout the crate: columns are listed
//! left to right, each column top to bottom, and a standard tableau has entries
//! strictly decreasing down every column and strictly decreasing left to right
//! along every row. The largest entry therefore sits in the top-left box.
//!
//! A standard tableau with two columns of sizes `p >= q` is the same data as its
//! ψ-word `(ψ(1), ..., ψ(n))`, where `ψ(k)` is the column holding `k`. Such a word
//! comes from a standard tableau exactly when it has the ballot property: every
//! suffix `{k > m}` contains at least as many 1s as 2s.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` that [`decompose`] searches by default.
pub const DEFAULT_SEARCH_BOUND: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("tableau has an empty column")]
    EmptyColumn,
    #[error("tableau entries must be exactly 1..={n} without repetition")]
    BadEntries { n: usize },
    #[error("pair elements must be distinct positive integers")]
    BadPairElements,
    #[error("pair map must be surjective onto 1..=s")]
    NotSurjective,
    #[error("pair map has {phi} values for {elements} elements")]
    LengthMismatch { elements: usize, phi: usize },
    #[error("ψ-word entries must be 1 or 2")]
    BadPsiEntry,
    #[error("ψ-word violates the ballot property after position {position}")]
    NotBallot { position: usize },
    #[error("not a standard Young tableau")]
    NotStandard,
    #[error("expected at most two columns, found {0}")]
    TooManyColumns(usize),
    #[error("invalid two-column type ({p},{q}): need p >= q >= 0 and p + q >= 1")]
    BadType { p: usize, q: usize },
    #[error("decomposition search bound exceeded: n = {n} > {bound}")]
    SearchBoundExceeded { n: usize, bound: usize },
    #[error("decomposition does not match tableau: {0}")]
    DecompositionMismatch(String),
}

/// A filling of a column-shaped diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauWire", into = "TableauWire")]
pub struct Tableau {
    columns: Vec<Vec<usize>>,
    n: usize,
    shape: Vec<usize>,
    young: bool,
    standard: bool,
}

#[derive(Serialize, Deserialize)]
struct TableauWire {
    columns: Vec<Vec<usize>>,
}

impl TryFrom<TableauWire> for Tableau {
    type Error = TableauError;

    fn try_from(w: TableauWire) -> Result<Self, Self::Error> {
        Tableau::new(w.columns)
    }
}

impl From<Tableau> for TableauWire {
    fn from(t: Tableau) -> Self {
        TableauWire { columns: t.columns }
    }
}

impl Tableau {
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        if columns.iter().any(Vec::is_empty) {
            return Err(TableauError::EmptyColumn);
        }
        let n: usize = columns.iter().map(Vec::len).sum();
        let entries: BTreeSet<usize> = columns.iter().flatten().copied().collect();
        if entries.len() != n || entries.first().is_some_and(|&e| e != 1) || entries.last().is_some_and(|&e| e != n) {
            return Err(TableauError::BadEntries { n });
        }
        let shape: Vec<usize> = columns.iter().map(Vec::len).collect();
        let young = shape.windows(2).all(|w| w[0] >= w[1]);
        let standard = standard_filling(&columns);
        Ok(Tableau {
            columns,
            n,
            shape,
            young,
            standard,
        })
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn is_young(&self) -> bool {
        self.young
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// `psi()[k - 1]` is the (1-based) column containing `k`.
    pub fn psi(&self) -> Vec<usize> {
        let mut psi = vec![0; self.n];
        for (c, col) in self.columns.iter().enumerate() {
            for &k in col {
                psi[k - 1] = c + 1;
            }
        }
        psi
    }

    /// The pair `({1..n}, ψ)`; inducing a tableau from it gives `self` back.
    pub fn to_pair(&self) -> OrderedPair {
        OrderedPair {
            elements: (1..=self.n).collect(),
            phi: self.psi(),
        }
    }
}

fn standard_filling(columns: &[Vec<usize>]) -> bool {
    let down = columns
        .iter()
        .all(|col| col.windows(2).all(|w| w[0] > w[1]));
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let across = (0..height).all(|r| {
        let row: Vec<usize> = columns.iter().filter_map(|c| c.get(r).copied()).collect();
        row.windows(2).all(|w| w[0] > w[1])
    });
    down && across
}

pub fn is_standard(t: &Tableau) -> bool {
    t.is_standard()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, col) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in col.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A finite totally ordered set of positive integers with a surjection onto
/// `{1, ..., s}`. Elements are kept sorted ascending with `phi` aligned.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedPair {
    elements: Vec<usize>,
    phi: Vec<usize>,
}

impl OrderedPair {
    pub fn new(elements: Vec<usize>, phi: Vec<usize>) -> Result<Self, TableauError> {
        if elements.len() != phi.len() {
            return Err(TableauError::LengthMismatch {
                elements: elements.len(),
                phi: phi.len(),
            });
        }
        let mut zipped: Vec<(usize, usize)> = elements.into_iter().zip(phi).collect();
        zipped.sort_unstable();
        if zipped.is_empty()
            || zipped[0].0 == 0
            || zipped.windows(2).any(|w| w[0].0 == w[1].0)
        {
            return Err(TableauError::BadPairElements);
        }
        let image: BTreeSet<usize> = zipped.iter().map(|&(_, v)| v).collect();
        let s = image.len();
        if image.first() != Some(&1) || image.last() != Some(&s) {
            return Err(TableauError::NotSurjective);
        }
        let (elements, phi) = zipped.into_iter().unzip();
        Ok(OrderedPair { elements, phi })
    }

    /// Builds a pair from `(element, value)` entries.
    pub fn from_map(entries: &[(usize, usize)]) -> Result<Self, TableauError> {
        let (e, p) = entries.iter().copied().unzip();
        Self::new(e, p)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of columns `s` of the induced tableau.
    pub fn columns(&self) -> usize {
        self.phi.iter().copied().max().unwrap_or(0)
    }

    /// Column sizes `b_i = |φ⁻¹(i)|`.
    pub fn column_sizes(&self) -> Vec<usize> {
        let mut b = vec![0; self.columns()];
        for &v in &self.phi {
            b[v - 1] += 1;
        }
        b
    }
}

/// The tableau induced by `(A, φ)`: column `i` holds `φ⁻¹(i)` in decreasing
/// order. Elements are replaced by their rank in `A`, which leaves `{1..n}`
/// unchanged and preserves every order comparison.
pub fn induced_tableau(pair: &OrderedPair) -> Tableau {
    let mut columns = vec![Vec::new(); pair.columns()];
    for (rank, &v) in pair.phi.iter().enumerate().rev() {
        columns[v - 1].push(rank + 1);
    }
    Tableau::new(columns).expect("a valid pair induces a well-formed tableau")
}

/// `φ` is an order-reversing bijection onto `{1..m}` and `|A| > 1`.
pub fn is_flag_type(pair: &OrderedPair) -> bool {
    let m = pair.len();
    m > 1 && pair.phi.iter().enumerate().all(|(i, &v)| v == m - i)
}

/// A standard tableau with at most two columns, carried together with its
/// ψ-word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColumnTableau {
    base: Tableau,
    p: usize,
    q: usize,
    psi: Vec<u8>,
}

impl TwoColumnTableau {
    pub fn from_psi(psi: &[u8]) -> Result<Self, TableauError> {
        if psi.is_empty() {
            return Err(TableauError::BadType { p: 0, q: 0 });
        }
        if psi.iter().any(|&c| c != 1 && c != 2) {
            return Err(TableauError::BadPsiEntry);
        }
        if let Some(position) = ballot_violation(psi) {
            return Err(TableauError::NotBallot { position });
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (k, &c) in psi.iter().enumerate().rev() {
            if c == 1 {
                left.push(k + 1);
            } else {
                right.push(k + 1);
            }
        }
        let (p, q) = (left.len(), right.len());
        let mut columns = vec![left];
        if q > 0 {
            columns.push(right);
        }
        let base = Tableau::new(columns).expect("ψ-word covers 1..=n");
        debug_assert!(base.is_standard());
        Ok(TwoColumnTableau {
            base,
            p,
            q,
            psi: psi.to_vec(),
        })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.base
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn jordan_type(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    /// `psi()[k - 1]` is 1 or 2.
    pub fn psi(&self) -> &[u8] {
        &self.psi
    }

    pub fn psi_string(&self) -> String {
        self.psi.iter().map(|c| char::from(b'0' + c)).collect()
    }

    /// The standard tableau induced by restricting ψ to positions
    /// `range.start+1 ..= range.end`, relabelled to start at 1.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Result<Self, TableauError> {
        Self::from_psi(&self.psi[range])
    }
}

impl TryFrom<Tableau> for TwoColumnTableau {
    type Error = TableauError;

    fn try_from(t: Tableau) -> Result<Self, Self::Error> {
        if t.columns.len() > 2 {
            return Err(TableauError::TooManyColumns(t.columns.len()));
        }
        if !t.is_standard() || !t.is_young() {
            return Err(TableauError::NotStandard);
        }
        let psi: Vec<u8> = t.psi().into_iter().map(|c| c as u8).collect();
        Self::from_psi(&psi)
    }
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}

/// First `m` whose suffix `{k > m}` has more 2s than 1s.
fn ballot_violation(psi: &[u8]) -> Option<usize> {
    let mut balance = 0i64;
    for m in (0..psi.len()).rev() {
        balance += if psi[m] == 1 { 1 } else { -1 };
        if balance < 0 {
            return Some(m);
        }
    }
    None
}

pub fn has_ballot_property(psi: &[u8]) -> bool {
    ballot_violation(psi).is_none()
}

pub fn psi_of(t: &TwoColumnTableau) -> &[u8] {
    t.psi()
}

fn check_type(p: usize, q: usize) -> Result<(), TableauError> {
    if q > p || p + q == 0 {
        Err(TableauError::BadType { p, q })
    } else {
        Ok(())
    }
}

/// All standard tableaux of two-column shape `(p, q)`, in lexicographic order
/// of their ψ-words.
pub fn enumerate_standard(p: usize, q: usize) -> Result<Vec<TwoColumnTableau>, TableauError> {
    check_type(p, q)?;
    fn go(ones: usize, twos: usize, word: &mut Vec<u8>, out: &mut Vec<TwoColumnTableau>) {
        if ones == 0 && twos == 0 {
            out.push(TwoColumnTableau::from_psi(word).expect("generated words are ballot"));
            return;
        }
        // Remaining letters form the suffix, which must keep #1 >= #2.
        if ones > twos {
            word.push(1);
            go(ones - 1, twos, word, out);
            word.pop();
        }
        if twos > 0 {
            word.push(2);
            go(ones, twos - 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(p, q, &mut Vec::with_capacity(p + q), &mut out);
    Ok(out)
}

/// Maximal runs of consecutive integers in `ψ⁻¹(1)` (the A-runs) and `ψ⁻¹(2)`
/// (the B-runs), with prefix sums of their sizes.
///
/// Runs are indexed so that either `A_1 < B_1 < A_2 < ... < A_t` (then `B_t` is
/// empty) or `B_1 < A_1 < ... < B_t < A_t`. Prefix sums are 0-indexed here:
/// `s_prefix[j] = a_0 + ... + a_{j-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub runs_a: Vec<Vec<usize>>,
    pub runs_b: Vec<Vec<usize>>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub s_prefix: Vec<usize>,
    pub big_s_prefix: Vec<usize>,
    pub leading_a: bool,
}

impl BlockDecomposition {
    pub fn t(&self) -> usize {
        self.runs_a.len()
    }

    /// All runs in increasing order.
    pub fn runs_in_order(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        for (ra, rb) in self.runs_a.iter().zip(&self.runs_b) {
            let (first, second) = if self.leading_a { (ra, rb) } else { (rb, ra) };
            for r in [first, second] {
                if !r.is_empty() {
                    out.push(r.as_slice());
                }
            }
        }
        out
    }
}

pub fn block_decomposition(t: &TwoColumnTableau) -> BlockDecomposition {
    let mut runs: Vec<(u8, Vec<usize>)> = Vec::new();
    for (k, &c) in t.psi().iter().enumerate() {
        match runs.last_mut() {
            Some((last, run)) if *last == c => run.push(k + 1),
            _ => runs.push((c, vec![k + 1])),
        }
    }
    let leading_a = t.psi()[0] == 1;
    let mut runs_a = Vec::new();
    let mut runs_b = Vec::new();
    for (c, run) in runs {
        if c == 1 {
            runs_a.push(run);
        } else {
            runs_b.push(run);
        }
    }
    // ψ(n) = 1 always, so there is one more A-run than B-runs when ψ(1) = 1.
    if runs_b.len() < runs_a.len() {
        runs_b.push(Vec::new());
    }
    let a: Vec<usize> = runs_a.iter().map(Vec::len).collect();
    let b: Vec<usize> = runs_b.iter().map(Vec::len).collect();
    let prefix = |v: &[usize]| {
        v.iter()
            .scan(0, |acc, &x| {
                let before = *acc;
                *acc += x;
                Some(before)
            })
            .collect::<Vec<_>>()
    };
    BlockDecomposition {
        s_prefix: prefix(&a),
        big_s_prefix: prefix(&b),
        runs_a,
        runs_b,
        a,
        b,
        leading_a,
    }
}

/// A partition of `{1..n}` into flag-type parts and parts inducing standard
/// two-column tableaux, each part carrying the restriction of the ambient ψ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub flag_parts: Vec<OrderedPair>,
    pub pq_parts: Vec<OrderedPair>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PartKind {
    Flag,
    TwoColumn,
}

fn is_two_column_part(pair: &OrderedPair) -> bool {
    if pair.columns() != 2 {
        return false;
    }
    let t = induced_tableau(pair);
    t.is_young() && t.is_standard()
}

impl Decomposition {
    /// Re-checks every part against `t` independently of the search.
    pub fn validate(&self, t: &Tableau) -> Result<(), TableauError> {
        let mismatch = |s: &str| Err(TableauError::DecompositionMismatch(s.to_string()));
        let psi = t.psi();
        let mut seen = vec![false; t.n()];
        for part in self.flag_parts.iter().chain(&self.pq_parts) {
            for (&e, &v) in part.elements().iter().zip(part.phi()) {
                if e == 0 || e > t.n() {
                    return mismatch("element outside 1..=n");
                }
                if std::mem::replace(&mut seen[e - 1], true) {
                    return mismatch("parts overlap");
                }
                if psi[e - 1] != v {
                    return mismatch("part map differs from the tableau's ψ");
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return mismatch("parts do not cover 1..=n");
        }
        if !self.flag_parts.iter().all(is_flag_type) {
            return mismatch("flag part is not of flag type");
        }
        if !self.pq_parts.iter().all(is_two_column_part) {
            return mismatch("two-column part does not induce a standard tableau");
        }
        Ok(())
    }
}

/// Searches for a decomposition of a standard tableau, using
/// [`DEFAULT_SEARCH_BOUND`].
pub fn decompose(t: &Tableau) -> Result<Option<Decomposition>, TableauError> {
    decompose_with_bound(t, DEFAULT_SEARCH_BOUND)
}

pub fn decompose_with_bound(t: &Tableau, bound: usize) -> Result<Option<Decomposition>, TableauError> {
    let mut found = None;
    search_decompositions(t, bound, &mut |d| {
        found = Some(d.clone());
        false
    })?;
    Ok(found)
}

/// Every decomposition of `t`, in canonical search order.
pub fn all_decompositions(t: &Tableau, bound: usize) -> Result<Vec<Decomposition>, TableauError> {
    let mut out = Vec::new();
    search_decompositions(t, bound, &mut |d| {
        out.push(d.clone());
        true
    })?;
    Ok(out)
}

/// Exhaustive search over set partitions. Parts are produced in order of their
/// minimum element; for a fixed minimum, candidate parts are tried in
/// decreasing bitmask order, so the whole remaining set comes first. `visit`
/// returns whether to keep searching.
fn search_decompositions(
    t: &Tableau,
    bound: usize,
    visit: &mut dyn FnMut(&Decomposition) -> bool,
) -> Result<(), TableauError> {
    if !t.is_standard() || !t.is_young() {
        return Err(TableauError::NotStandard);
    }
    let n = t.n();
    if n > bound || n > 30 {
        return Err(TableauError::SearchBoundExceeded { n, bound });
    }
    let psi = t.psi();
    let mut parts: Vec<(PartKind, u32)> = Vec::new();
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    recurse(&psi, all, &mut parts, visit);
    Ok(())
}

fn pair_of(psi: &[usize], mask: u32) -> OrderedPair {
    let elements: Vec<usize> = (0..psi.len()).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
    let phi = elements.iter().map(|&e| psi[e - 1]).collect();
    OrderedPair::new(elements, phi).unwrap_or_else(|_| OrderedPair {
        elements: Vec::new(),
        phi: Vec::new(),
    })
}

/// Kinds a part may play, two-column first. A two-element part with ψ = (2, 1)
/// qualifies as both.
fn classify(psi: &[usize], mask: u32, flag_only: bool) -> Vec<PartKind> {
    let pair = pair_of(psi, mask);
    if pair.is_empty() {
        // Image was not an initial segment {1..s}.
        return Vec::new();
    }
    let mut kinds = Vec::with_capacity(2);
    if !flag_only && is_two_column_part(&pair) {
        kinds.push(PartKind::TwoColumn);
    }
    if is_flag_type(&pair) {
        kinds.push(PartKind::Flag);
    }
    kinds
}

fn recurse(
    psi: &[usize],
    remaining: u32,
    parts: &mut Vec<(PartKind, u32)>,
    visit: &mut dyn FnMut(&Decomposition) -> bool,
) -> bool {
    if remaining == 0 {
        let mut d = Decomposition {
            flag_parts: Vec::new(),
            pq_parts: Vec::new(),
        };
        for &(kind, mask) in parts.iter() {
            let pair = pair_of(psi, mask);
            match kind {
                PartKind::Flag => d.flag_parts.push(pair),
                PartKind::TwoColumn => d.pq_parts.push(pair),
            }
        }
        return visit(&d);
    }
    let low = remaining & remaining.wrapping_neg();
    let rest = remaining & !low;
    let low_index = low.trailing_zeros() as usize;
    // Entries outside the first two columns can only sit in flag parts.
    let needs_flag = psi[low_index] > 2;
    let mut sub = rest;
    loop {
        let part = sub | low;
        for kind in classify(psi, part, needs_flag) {
            parts.push((kind, part));
            let keep_going = recurse(psi, rest & !sub, parts, visit);
            parts.pop();
            if !keep_going {
                return false;
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    true
}
