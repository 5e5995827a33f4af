//! Tower structure and closed descriptions of the components of a two-block
//! Springer fiber.
//!
//! For a standard tableau `σ` of type `(p, q)` with component `Y_σ`, the
//! truncation maps `Y_σ(r) -> Y_σ(r-1)` (forget `F_r`) are isomorphisms when `r`
//! sits in the left column and `P^1`-bundles when it sits in the right column.
//! Hence `[Y_σ] = (1 + L)^q`.
//!
//! [`normalize`] reduces `σ` to pieces that can be described directly:
//!
//! * `Reduce`: when `ψ(1) = ... = ψ(a) = 1`, every flag in the component has
//!   `F_i = im N^{p-i}` for `i <= a`, and the rest of the flag is a component
//!   for the quotient by `im N^{p-a}`.
//! * `Split`: when the ψ-word returns to balance at position `2S` before the
//!   end, every flag has `F_{2S} = ker N^S` and the component is a product of a
//!   component in `ker N^S` and one in `V / ker N^S`.
//! * `Basic`: what remains is a word `2...` that stays unbalanced until its
//!   final run of 1s.
//!
//! [`closed_conditions`] flattens that tree into constraints on the ambient
//! flag. Each constraint lives in a [`Frame`]: the subquotient `F_hi / F_lo`
//! with its induced operator `N'`. Kernel and image powers refer to `N'`; flag
//! indices are absolute.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grothendieck::{flag_class, MotiveClass};
use crate::tableau::{block_decomposition, BlockDecomposition, Decomposition, Tableau, TableauError, TwoColumnTableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("normal form is for type {found:?}, expected {expected:?}")]
    TypeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("dimension-inconsistent constraint {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Iso,
    P1,
}

/// The maps `f_r : Y_σ(r) -> Y_σ(r-1)` for `r = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerDescriptor {
    steps: Vec<Step>,
}

impl TowerDescriptor {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn q(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::P1).count()
    }

    /// Positions (1-based) where the fibre is a projective line.
    pub fn p1_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::P1)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for TowerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Iso => "I",
                Step::P1 => "P",
            })
            .collect();
        f.write_str(&s.join(" "))
    }
}

pub fn tower_of(t: &TwoColumnTableau) -> TowerDescriptor {
    TowerDescriptor {
        steps: t
            .psi()
            .iter()
            .map(|&c| if c == 1 { Step::Iso } else { Step::P1 })
            .collect(),
    }
}

/// Class of `Y_σ`: a factor `1 + L` for every `P^1` step of the tower.
pub fn motive_of(t: &TwoColumnTableau) -> MotiveClass {
    tower_of(t)
        .steps()
        .iter()
        .map(|s| match s {
            Step::Iso => MotiveClass::one(),
            Step::P1 => MotiveClass::projective_line(),
        })
        .product()
}

/// Class of the component of a decomposable tableau: a full flag variety for
/// each flag-type part and `(1 + L)^{q_t}` for each two-column part.
pub fn decomposable_class(t: &Tableau, d: &Decomposition) -> Result<MotiveClass, TowerError> {
    d.validate(t)?;
    let flags = d.flag_parts.iter().map(|part| flag_class(part.len()));
    let towers = d.pq_parts.iter().map(|part| {
        let q = part.column_sizes()[1];
        MotiveClass::projective_line().pow(q)
    });
    Ok(flags.chain(towers).product())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizedForm {
    /// The first `prefix_len` flag spaces are forced: `F_i = im N^{forced_ranks[i-1]}`.
    Reduce {
        tableau: TwoColumnTableau,
        prefix_len: usize,
        forced_ranks: Vec<usize>,
        child: Option<Box<NormalizedForm>>,
    },
    /// `F_position = ker N^{position/2}`; `left` lives in that kernel and
    /// `right` in the quotient by it.
    Split {
        tableau: TwoColumnTableau,
        position: usize,
        left: Box<NormalizedForm>,
        right: Box<NormalizedForm>,
    },
    Basic {
        tableau: TwoColumnTableau,
        blocks: BlockDecomposition,
    },
}

impl NormalizedForm {
    pub fn tableau(&self) -> &TwoColumnTableau {
        match self {
            NormalizedForm::Reduce { tableau, .. }
            | NormalizedForm::Split { tableau, .. }
            | NormalizedForm::Basic { tableau, .. } => tableau,
        }
    }

    /// Tableaux at the `Basic` leaves, left to right.
    pub fn leaves(&self) -> Vec<&TwoColumnTableau> {
        match self {
            NormalizedForm::Reduce { child, .. } => child.as_ref().map(|c| c.leaves()).unwrap_or_default(),
            NormalizedForm::Split { left, right, .. } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
            NormalizedForm::Basic { tableau, .. } => vec![tableau],
        }
    }

    /// Sum of the leaves' `q`, i.e. the dimension of the component.
    pub fn dimension(&self) -> usize {
        self.leaves().iter().map(|t| t.q()).sum()
    }

    pub fn split_count(&self) -> usize {
        match self {
            NormalizedForm::Reduce { child, .. } => child.as_ref().map_or(0, |c| c.split_count()),
            NormalizedForm::Split { left, right, .. } => 1 + left.split_count() + right.split_count(),
            NormalizedForm::Basic { .. } => 0,
        }
    }
}

impl fmt::Display for NormalizedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizedForm::Reduce {
                prefix_len, child, ..
            } => {
                write!(f, "Reduce({prefix_len}")?;
                if let Some(c) = child {
                    write!(f, ", {c}")?;
                }
                write!(f, ")")
            }
            NormalizedForm::Split {
                position,
                left,
                right,
                ..
            } => write!(f, "Split({position}, {left}, {right})"),
            NormalizedForm::Basic { tableau, .. } => write!(f, "Basic({})", tableau.psi_string()),
        }
    }
}

pub fn normalize(t: &TwoColumnTableau) -> NormalizedForm {
    let blocks = block_decomposition(t);
    let n = t.n();
    if blocks.leading_a {
        let a1 = blocks.a[0];
        let forced_ranks = (1..=a1).map(|i| t.p() - i).collect();
        let child = (a1 < n).then(|| {
            let rest = t.restrict(a1..n).expect("suffix of a ballot word is ballot");
            Box::new(normalize(&rest))
        });
        return NormalizedForm::Reduce {
            tableau: t.clone(),
            prefix_len: a1,
            forced_ranks,
            child,
        };
    }
    // Runs are B_1 < A_1 < ... < B_t < A_t. Look for the first j >= 2 with
    // s_j >= S_j: the word is balanced at 2 S_j, inside A_{j-1}.
    let split = (1..blocks.t()).find(|&j| blocks.s_prefix[j] >= blocks.big_s_prefix[j]);
    match split {
        Some(j) => {
            let position = 2 * blocks.big_s_prefix[j];
            let left = t.restrict(0..position).expect("balanced prefix is ballot");
            let right = t.restrict(position..n).expect("suffix of a ballot word is ballot");
            NormalizedForm::Split {
                tableau: t.clone(),
                position,
                left: Box::new(normalize(&left)),
                right: Box::new(normalize(&right)),
            }
        }
        None => NormalizedForm::Basic {
            tableau: t.clone(),
            blocks,
        },
    }
}

/// Subquotient `F_hi / F_lo` on which a constraint is stated, with the Jordan
/// type its induced operator has on the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    pub lo: usize,
    pub hi: usize,
    pub jordan: (usize, usize),
}

impl Frame {
    pub fn root(p: usize, q: usize) -> Self {
        Frame {
            lo: 0,
            hi: p + q,
            jordan: (p, q),
        }
    }

    pub fn is_root(&self) -> bool {
        self.lo == 0
    }

    pub fn ker_dim(&self, k: usize) -> usize {
        let (p, q) = self.jordan;
        k.min(p) + k.min(q)
    }

    pub fn im_dim(&self, k: usize) -> usize {
        let (p, q) = self.jordan;
        p.saturating_sub(k) + q.saturating_sub(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstraintKind {
    /// `ker N'^power ⊆ F_index`
    LowerKer { index: usize, power: usize },
    /// `F_index ⊆ ker N'^power`
    UpperKer { index: usize, power: usize },
    /// `F_index = ker N'^power`
    ForcedKer { index: usize, power: usize },
    /// `F_index = im N'^power`
    ForcedIm { index: usize, power: usize },
    /// `N F_i ⊆ F_{i-1}` for `from <= i <= to`
    Shift { from: usize, to: usize },
    /// `N^power F_index ⊆ F_target`
    PowerInto {
        power: usize,
        index: usize,
        target: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub frame: Frame,
    pub kind: ConstraintKind,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.frame.is_root() { "N" } else { "N'" };
        match self.kind {
            ConstraintKind::LowerKer { index, power } => write!(f, "ker {op}^{power} ⊆ F_{index}")?,
            ConstraintKind::UpperKer { index, power } => write!(f, "F_{index} ⊆ ker {op}^{power}")?,
            ConstraintKind::ForcedKer { index, power } => write!(f, "F_{index} = ker {op}^{power}")?,
            ConstraintKind::ForcedIm { index, power } => write!(f, "F_{index} = im {op}^{power}")?,
            ConstraintKind::Shift { from, to } => write!(f, "N F_i ⊆ F_(i-1) for {from} <= i <= {to}")?,
            ConstraintKind::PowerInto {
                power,
                index,
                target,
            } => write!(f, "N^{power} F_{index} ⊆ F_{target}")?,
        }
        if !self.frame.is_root() {
            let (p, q) = self.frame.jordan;
            write!(f, "  [on F_{}/F_{}, type ({p},{q})]", self.frame.hi, self.frame.lo)?;
        }
        Ok(())
    }
}

/// Flattened closed description of one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedConditionSet {
    pub n: usize,
    pub jordan: (usize, usize),
    pub constraints: Vec<Constraint>,
}

impl ClosedConditionSet {
    /// Every frame used, each once, in order of first use.
    pub fn frames(&self) -> Vec<Frame> {
        let mut out: Vec<Frame> = Vec::new();
        for c in &self.constraints {
            if !out.contains(&c.frame) {
                out.push(c.frame);
            }
        }
        out
    }
}

pub fn closed_conditions(nf: &NormalizedForm, jordan: (usize, usize)) -> Result<ClosedConditionSet, TowerError> {
    let found = nf.tableau().jordan_type();
    if found != jordan {
        return Err(TowerError::TypeMismatch {
            expected: jordan,
            found,
        });
    }
    let mut constraints = Vec::new();
    flatten(nf, Frame::root(jordan.0, jordan.1), &mut constraints)?;
    for c in &constraints {
        check_dimensions(c)?;
    }
    Ok(ClosedConditionSet {
        n: jordan.0 + jordan.1,
        jordan,
        constraints,
    })
}

fn flatten(nf: &NormalizedForm, frame: Frame, out: &mut Vec<Constraint>) -> Result<(), TowerError> {
    let t = nf.tableau();
    if t.jordan_type() != frame.jordan || frame.hi - frame.lo != t.n() {
        return Err(TowerError::TypeMismatch {
            expected: frame.jordan,
            found: t.jordan_type(),
        });
    }
    let (p, q) = frame.jordan;
    let lo = frame.lo;
    match nf {
        NormalizedForm::Reduce {
            prefix_len,
            forced_ranks,
            child,
            ..
        } => {
            for (i, &power) in forced_ranks.iter().enumerate() {
                out.push(Constraint {
                    frame,
                    kind: ConstraintKind::ForcedIm { index: lo + i + 1, power },
                });
            }
            if let Some(child) = child {
                let sub = Frame {
                    lo: lo + prefix_len,
                    hi: frame.hi,
                    jordan: (p - prefix_len, q),
                };
                flatten(child, sub, out)?;
            }
        }
        NormalizedForm::Split {
            position,
            left,
            right,
            ..
        } => {
            let s = position / 2;
            out.push(Constraint {
                frame,
                kind: ConstraintKind::ForcedKer {
                    index: lo + position,
                    power: s,
                },
            });
            let mid = lo + position;
            flatten(
                left,
                Frame {
                    lo,
                    hi: mid,
                    jordan: (s, s),
                },
                out,
            )?;
            flatten(
                right,
                Frame {
                    lo: mid,
                    hi: frame.hi,
                    jordan: (p - s, q - s),
                },
                out,
            )?;
        }
        NormalizedForm::Basic { tableau, .. } => basic_constraints(tableau, frame, out),
    }
    Ok(())
}

/// A basic word is `2...` and stays unbalanced until its last run of 1s. Its
/// component is cut out by:
///
/// * `ker N'^{#1s up to i} ⊆ F_i ⊆ ker N'^{max(#1s, #2s) up to i}`;
/// * for each matched pair (a 2 at `a` closed by a 1 at `b`, matching as with
///   parentheses) `N^{(b-a+1)/2} F_b ⊆ F_{a-1}`, i.e. `F_b = N^{-(b-a+1)/2} F_{a-1}`;
/// * `N F_i ⊆ F_{i-1}` throughout.
///
/// The sandwich bounds alone do not cut out the component once pairs nest
/// (type (2,2), word 2211, gives the whole fibre); the matched-pair
/// conditions do.
fn basic_constraints(t: &TwoColumnTableau, frame: Frame, out: &mut Vec<Constraint>) {
    let lo = frame.lo;
    let height = frame.hi - frame.lo;
    let (mut ones, mut twos) = (0, 0);
    let mut open: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    for (k, &c) in t.psi().iter().enumerate() {
        let i = k + 1;
        if c == 1 {
            ones += 1;
            if let Some(a) = open.pop() {
                pairs.push((a, i));
            }
        } else {
            twos += 1;
            open.push(i);
        }
        let lower = ones;
        let upper = ones.max(twos);
        if lower > 0 {
            out.push(Constraint {
                frame,
                kind: ConstraintKind::LowerKer { index: lo + i, power: lower },
            });
        }
        if upper > lower && frame.ker_dim(upper) < height {
            out.push(Constraint {
                frame,
                kind: ConstraintKind::UpperKer { index: lo + i, power: upper },
            });
        }
    }
    pairs.sort_unstable();
    for (a, b) in pairs {
        // The outermost pair starts at 1 and is already F_b = ker N'^{b/2}.
        if a > 1 {
            out.push(Constraint {
                frame,
                kind: ConstraintKind::PowerInto {
                    power: (b - a).div_ceil(2),
                    index: lo + b,
                    target: lo + a - 1,
                },
            });
        }
    }
    out.push(Constraint {
        frame,
        kind: ConstraintKind::Shift {
            from: lo + 1,
            to: frame.hi,
        },
    });
}

fn check_dimensions(c: &Constraint) -> Result<(), TowerError> {
    let f = c.frame;
    let inside = |index: usize| index > f.lo && index <= f.hi;
    let ok = f.hi - f.lo == f.jordan.0 + f.jordan.1
        && match c.kind {
            ConstraintKind::LowerKer { index, power } => inside(index) && f.ker_dim(power) <= index - f.lo,
            ConstraintKind::UpperKer { index, power } => inside(index) && index - f.lo <= f.ker_dim(power),
            ConstraintKind::ForcedKer { index, power } => inside(index) && index - f.lo == f.ker_dim(power),
            ConstraintKind::ForcedIm { index, power } => inside(index) && index - f.lo == f.im_dim(power),
            ConstraintKind::Shift { from, to } => inside(from) && inside(to) && from <= to,
            ConstraintKind::PowerInto {
                power,
                index,
                target,
            } => inside(index) && target >= f.lo && target < index && index - target <= f.ker_dim(power),
        };
    if ok {
        Ok(())
    } else {
        Err(TowerError::Inconsistent(c.to_string()))
    }
}
