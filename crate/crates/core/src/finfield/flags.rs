//! Fixed flags of a nilpotent operator: enumeration, Spaltenstein strata,
//! closed conditions and component point counts.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::linalg::{projective_points, Subspace, Vector};
use super::nilpotent::{jordan_type_from_kernel_dims, NilpotentOp};
use super::FieldError;
use crate::grothendieck::MotiveClass;
use crate::strata::StratumWord;
use crate::tableau::TwoColumnTableau;
use crate::tower::{closed_conditions, normalize, ClosedConditionSet, ConstraintKind, Frame};

/// Enumeration refuses instances whose fixed-flag count would exceed this.
pub const DEFAULT_FLAG_BOUND: u64 = 10_000_000;

/// A complete flag `F_1 ⊂ ... ⊂ F_n` with `dim F_i = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedFlag {
    spaces: Vec<Subspace>,
}

impl FixedFlag {
    /// Checks strict nesting and dimensions; does not require any operator.
    pub fn new(spaces: Vec<Subspace>) -> Result<Self, FieldError> {
        let n = spaces.len();
        for (i, s) in spaces.iter().enumerate() {
            if s.dim() != i + 1 || s.ambient_dim() != n {
                return Err(FieldError::NotAFlag);
            }
            if i > 0 && !spaces[i - 1].is_subspace_of(s) {
                return Err(FieldError::NotAFlag);
            }
        }
        Ok(FixedFlag { spaces })
    }

    pub fn n(&self) -> usize {
        self.spaces.len()
    }

    /// `F_i` for `0 <= i <= n`, with `F_0 = 0`.
    pub fn space(&self, i: usize) -> Subspace {
        match i {
            0 => {
                let s = &self.spaces[0];
                Subspace::zero(s.field(), s.ambient_dim())
            }
            _ => self.spaces[i - 1].clone(),
        }
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// `N F_i ⊆ F_{i-1}` for every `i`.
    pub fn is_fixed_by(&self, op: &NilpotentOp) -> bool {
        (1..=self.n()).all(|i| self.space(i).image(op.matrix()).is_subspace_of(&self.space(i - 1)))
    }
}

/// The closed conditions of the form `N^i F_k ⊆ F_m`, `N^i F_k ⊆ S` and
/// `dim(F_r + N^k F_r) <= d`.
#[derive(Clone, Debug)]
pub enum LemmaShape {
    PowerIntoFlag { power: usize, index: usize, target: usize },
    PowerIntoSubspace { power: usize, index: usize, space: Subspace },
    SumDimension { index: usize, power: usize, bound: usize },
}

pub fn lemma_predicate(op: &NilpotentOp, flag: &FixedFlag, shape: &LemmaShape) -> Result<bool, FieldError> {
    let n = flag.n();
    let check = |i: usize| {
        if i > n {
            Err(FieldError::IndexOutOfRange { index: i, n })
        } else {
            Ok(())
        }
    };
    Ok(match shape {
        LemmaShape::PowerIntoFlag { power, index, target } => {
            check(*index)?;
            check(*target)?;
            let image = flag.space(*index).image(&op.power_matrix(*power));
            image.is_subspace_of(&flag.space(*target))
        }
        LemmaShape::PowerIntoSubspace { power, index, space } => {
            check(*index)?;
            flag.space(*index).image(&op.power_matrix(*power)).is_subspace_of(space)
        }
        LemmaShape::SumDimension { index, power, bound } => {
            check(*index)?;
            let f = flag.space(*index);
            f.sum(&f.image(&op.power_matrix(*power))).dim() <= *bound
        }
    })
}

/// Number of fixed flags as a polynomial in the field size, for any Jordan
/// type. A line of `ker N` lying in `im N^{h-1}` but not in `im N^h` leaves a
/// quotient whose type loses one box from a block of size `h`, and there are
/// `L^{a_{h+1}} (1 + ... + L^{a_h - a_{h+1} - 1})` such lines, where `a_h`
/// counts blocks of size at least `h`.
pub fn fixed_flag_class(jordan: &[usize]) -> MotiveClass {
    fn go(lambda: Vec<usize>, memo: &mut HashMap<Vec<usize>, MotiveClass>) -> MotiveClass {
        if lambda.is_empty() {
            return MotiveClass::one();
        }
        if let Some(c) = memo.get(&lambda) {
            return c.clone();
        }
        let max = lambda[0];
        let at_least = |h: usize| lambda.iter().filter(|&&l| l >= h).count();
        let mut total = MotiveClass::zero();
        for h in 1..=max {
            let (a, b) = (at_least(h), at_least(h + 1));
            if a == b {
                continue;
            }
            let lines = &MotiveClass::lefschetz().pow(b) * &MotiveClass::projective_space(a - b);
            let mut next = lambda.clone();
            let pos = next.iter().rposition(|&l| l == h).expect("a block of size h exists");
            next[pos] -= 1;
            next.retain(|&l| l > 0);
            next.sort_unstable_by(|x, y| y.cmp(x));
            total = &total + &(&lines * &go(next, memo));
        }
        memo.insert(lambda, total.clone());
        total
    }
    let mut lambda: Vec<usize> = jordan.iter().copied().filter(|&l| l > 0).collect();
    lambda.sort_unstable_by(|x, y| y.cmp(x));
    go(lambda, &mut HashMap::new())
}

fn check_capacity(op: &NilpotentOp, bound: u64) -> Result<(), FieldError> {
    let projected = fixed_flag_class(op.jordan_type()).specialize(op.field().order() as u64);
    if projected > BigInt::from(bound) {
        return Err(FieldError::Capacity { projected, bound });
    }
    Ok(())
}

/// Calls `visit` on every fixed flag. Lines are chosen one at a time: `F_{i+1}`
/// runs over `F_i + ⟨v⟩` for lines `⟨v⟩` of `N^{-1}(F_i) / F_i`.
pub fn for_each_fixed_flag(op: &NilpotentOp, bound: u64, mut visit: impl FnMut(&FixedFlag)) -> Result<(), FieldError> {
    check_capacity(op, bound)?;
    let field = op.field();
    let n = op.n();
    fn extend(op: &NilpotentOp, chain: &mut Vec<Subspace>, visit: &mut dyn FnMut(&FixedFlag)) {
        let n = op.n();
        let field = op.field();
        if chain.len() == n {
            visit(&FixedFlag {
                spaces: chain.clone(),
            });
            return;
        }
        let current = chain.last().cloned().unwrap_or_else(|| Subspace::zero(field, n));
        let allowed = current.preimage(op.matrix());
        let complement = current.complement_in(&allowed);
        for coeffs in projective_points(field, complement.len()) {
            let mut v = vec![0; n];
            for (c, w) in coeffs.iter().zip(&complement) {
                for (x, &y) in v.iter_mut().zip(w) {
                    *x = field.add(*x, field.mul(*c, y));
                }
            }
            chain.push(current.with_vector(&v));
            extend(op, chain, visit);
            chain.pop();
        }
    }
    let mut chain = Vec::with_capacity(n);
    let _ = field;
    extend(op, &mut chain, &mut visit);
    Ok(())
}

pub fn enumerate_fixed_flags(op: &NilpotentOp) -> Result<Vec<FixedFlag>, FieldError> {
    enumerate_fixed_flags_with_bound(op, DEFAULT_FLAG_BOUND)
}

pub fn enumerate_fixed_flags_with_bound(op: &NilpotentOp, bound: u64) -> Result<Vec<FixedFlag>, FieldError> {
    let mut out = Vec::new();
    for_each_fixed_flag(op, bound, |f| out.push(f.clone()))?;
    Ok(out)
}

pub fn count_fixed_flags(op: &NilpotentOp) -> Result<u64, FieldError> {
    let mut count = 0;
    for_each_fixed_flag(op, DEFAULT_FLAG_BOUND, |_| count += 1)?;
    Ok(count)
}

/// Number of complete flags in `F_t^m`, by enumeration (the zero operator fixes
/// every flag).
pub fn count_complete_flags(m: usize, field: super::PrimeField) -> Result<u64, FieldError> {
    count_fixed_flags(&NilpotentOp::of_type(&vec![1; m], field)?)
}

/// `F_hi ∩ N^{-k}(F_lo)`: the preimage of `ker N'^k` for the operator induced
/// on `F_hi / F_lo`.
pub fn frame_kernel(op: &NilpotentOp, flag: &FixedFlag, frame: &Frame, k: usize) -> Subspace {
    flag.space(frame.lo)
        .preimage(&op.power_matrix(k))
        .intersection(&flag.space(frame.hi))
}

/// `N^k(F_hi) + F_lo`: the preimage of `im N'^k`.
pub fn frame_image(op: &NilpotentOp, flag: &FixedFlag, frame: &Frame, k: usize) -> Subspace {
    flag.space(frame.hi)
        .image(&op.power_matrix(k))
        .sum(&flag.space(frame.lo))
}

/// Jordan type of the operator induced on `F_hi / F_lo`, read off kernel
/// dimensions.
pub fn frame_jordan_type(op: &NilpotentOp, flag: &FixedFlag, frame: &Frame) -> Vec<usize> {
    let base = frame.lo;
    let height = frame.hi - frame.lo;
    let dims: Vec<usize> = (0..=height)
        .map(|k| frame_kernel(op, flag, frame, k).dim() - base)
        .collect();
    jordan_type_from_kernel_dims(&dims)
}

pub fn satisfies(op: &NilpotentOp, flag: &FixedFlag, set: &ClosedConditionSet) -> bool {
    set.constraints.iter().all(|c| {
        let f = &c.frame;
        match c.kind {
            ConstraintKind::LowerKer { index, power } => frame_kernel(op, flag, f, power).is_subspace_of(&flag.space(index)),
            ConstraintKind::UpperKer { index, power } => into_flag(op, flag, power, index, f.lo),
            ConstraintKind::ForcedKer { index, power } => frame_kernel(op, flag, f, power) == flag.space(index),
            ConstraintKind::ForcedIm { index, power } => frame_image(op, flag, f, power) == flag.space(index),
            ConstraintKind::Shift { from, to } => (from..=to).all(|i| into_flag(op, flag, 1, i, i - 1)),
            ConstraintKind::PowerInto { power, index, target } => into_flag(op, flag, power, index, target),
        }
    })
}

fn into_flag(op: &NilpotentOp, flag: &FixedFlag, power: usize, index: usize, target: usize) -> bool {
    lemma_predicate(
        op,
        flag,
        &LemmaShape::PowerIntoFlag {
            power,
            index,
            target,
        },
    )
    .expect("constraint indices are checked when the set is built")
}

fn component_conditions(t: &TwoColumnTableau) -> Result<ClosedConditionSet, FieldError> {
    Ok(closed_conditions(&normalize(t), t.jordan_type())?)
}

/// Fixed flags of the type-`(p, q)` operator lying on the component of `t`.
pub fn component_flags(t: &TwoColumnTableau, op: &NilpotentOp) -> Result<Vec<FixedFlag>, FieldError> {
    check_operator(op, t.p(), t.q())?;
    let set = component_conditions(t)?;
    let mut out = Vec::new();
    for_each_fixed_flag(op, DEFAULT_FLAG_BOUND, |f| {
        if satisfies(op, f, &set) {
            out.push(f.clone());
        }
    })?;
    Ok(out)
}

pub fn count_component_points(t: &TwoColumnTableau, field: super::PrimeField) -> Result<u64, FieldError> {
    let op = NilpotentOp::two_block(t.p(), t.q(), field)?;
    let set = component_conditions(t)?;
    let mut count = 0;
    for_each_fixed_flag(&op, DEFAULT_FLAG_BOUND, |f| {
        if satisfies(&op, f, &set) {
            count += 1;
        }
    })?;
    Ok(count)
}

fn check_operator(op: &NilpotentOp, p: usize, q: usize) -> Result<(), FieldError> {
    let expected: Vec<usize> = [p, q].into_iter().filter(|&x| x > 0).collect();
    if op.jordan_type() != expected.as_slice() {
        return Err(FieldError::WrongType {
            expected,
            found: op.jordan_type().to_vec(),
        });
    }
    Ok(())
}

/// All flags of the stratum `word` for the two-block operator `op`.
///
/// Tracks an adapted basis of `V / F_i` as two Jordan chains of vectors in `V`
/// (bottom vector first). Choice 1 takes the bottom of the longer chain;
/// choice 2 with parameter `a` takes `a·long_1 + short_1`, after which the
/// short chain becomes `short_{i+1} + a·long_{i+1}`.
pub fn stratum_flags(op: &NilpotentOp, word: &StratumWord) -> Result<Vec<FixedFlag>, FieldError> {
    let jordan = op.jordan_type().to_vec();
    if jordan.len() > 2 {
        return Err(FieldError::WrongType {
            expected: vec![],
            found: jordan,
        });
    }
    let (p, q) = (jordan[0], jordan.get(1).copied().unwrap_or(0));
    if StratumWord::new(p, q, word.choices().to_vec()).is_none() {
        return Err(FieldError::InvalidWord(word.to_string()));
    }
    let field = op.field();
    let n = op.n();
    let long: Vec<Vector> = (1..=p).map(|i| op.basis_vector(i, 1)).collect();
    let short: Vec<Vector> = (1..=q).map(|i| op.basis_vector(i, 2)).collect();

    struct Replay<'a> {
        field: super::PrimeField,
        n: usize,
        word: &'a [u8],
        out: Vec<FixedFlag>,
    }

    fn go(r: &mut Replay<'_>, chain: &mut Vec<Subspace>, long: Vec<Vector>, short: Vec<Vector>) {
        let pos = chain.len();
        if pos == r.n {
            r.out.push(FixedFlag {
                spaces: chain.clone(),
            });
            return;
        }
        let current = chain.last().cloned().unwrap_or_else(|| Subspace::zero(r.field, r.n));
        let f = r.field;
        match r.word[pos] {
            1 => {
                chain.push(current.with_vector(&long[0]));
                let rest = long[1..].to_vec();
                if rest.len() < short.len() {
                    go(r, chain, short, rest);
                } else {
                    go(r, chain, rest, short);
                }
                chain.pop();
            }
            _ => {
                for a in f.elements() {
                    let combo = |s: &Vector, l: &Vector| -> Vector {
                        s.iter().zip(l).map(|(&x, &y)| f.add(x, f.mul(a, y))).collect()
                    };
                    chain.push(current.with_vector(&combo(&short[0], &long[0])));
                    let new_short: Vec<Vector> = (1..short.len()).map(|i| combo(&short[i], &long[i])).collect();
                    go(r, chain, long.clone(), new_short);
                    chain.pop();
                }
            }
        }
    }

    let mut replay = Replay {
        field,
        n,
        word: word.choices(),
        out: Vec::new(),
    };
    go(&mut replay, &mut Vec::with_capacity(n), long, short);
    Ok(replay.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finfield::{PowerKind, PrimeField};
    use crate::grothendieck::flag_class;
    use crate::strata::{enumerate_strata, fiber_class, stratum_of};
    use crate::tableau::enumerate_standard;
    use std::collections::HashSet;

    fn field(t: u32) -> PrimeField {
        PrimeField::new(t).unwrap()
    }

    fn op(jordan: &[usize], t: u32) -> NilpotentOp {
        NilpotentOp::of_type(jordan, field(t)).unwrap()
    }

    #[test]
    fn small_fixed_flag_counts() {
        assert_eq!(count_fixed_flags(&op(&[1, 1], 2)).unwrap(), 3);
        assert_eq!(count_fixed_flags(&op(&[2, 1], 2)).unwrap(), 5);
        let single = enumerate_fixed_flags(&op(&[2], 3)).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].space(1), op(&[2], 3).kernel_power(1));
    }

    #[test]
    fn enumeration_is_fixed_and_duplicate_free() {
        for jordan in [vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
            let n = op(&jordan, 3);
            let flags = enumerate_fixed_flags(&n).unwrap();
            assert!(flags.iter().all(|f| f.is_fixed_by(&n)));
            let distinct: HashSet<&FixedFlag> = flags.iter().collect();
            assert_eq!(distinct.len(), flags.len());
            assert_eq!(
                BigInt::from(flags.len()),
                fixed_flag_class(&jordan).specialize(3),
                "type {jordan:?}"
            );
        }
    }

    #[test]
    fn complete_flag_counts() {
        assert_eq!(count_complete_flags(3, field(2)).unwrap(), 21);
        for m in 1..=4 {
            for t in [2, 3] {
                assert_eq!(
                    BigInt::from(count_complete_flags(m, field(t)).unwrap()),
                    flag_class(m).specialize(t as u64)
                );
            }
        }
    }

    #[test]
    fn capacity_guard() {
        let n = op(&[1, 1, 1, 1], 3);
        assert!(matches!(
            enumerate_fixed_flags_with_bound(&n, 100),
            Err(FieldError::Capacity { bound: 100, .. })
        ));
    }

    #[test]
    fn lemma_predicates() {
        let n = op(&[2, 1], 2);
        let f = field(2);
        let flag = FixedFlag::new(vec![
            Subspace::span(f, 3, &[n.basis_vector(1, 2)]),
            n.power_subspace(1, PowerKind::Kernel),
            Subspace::full(f, 3),
        ])
        .unwrap();
        assert!(flag.is_fixed_by(&n));
        let a = |power, index, target| {
            lemma_predicate(&n, &flag, &LemmaShape::PowerIntoFlag { power, index, target }).unwrap()
        };
        assert!(a(1, 2, 1));
        assert!(a(0, 1, 3));
        assert!(!a(0, 2, 1));
        assert!(!a(1, 3, 1));
        let h = |index, power, bound| {
            lemma_predicate(&n, &flag, &LemmaShape::SumDimension { index, power, bound }).unwrap()
        };
        assert!(h(1, 1, 3));
        assert!(h(3, 1, 3));
        assert!(!h(3, 0, 2));
        let im = n.image_power(1);
        assert!(lemma_predicate(&n, &flag, &LemmaShape::PowerIntoSubspace { power: 1, index: 3, space: im }).unwrap());
        assert!(matches!(
            lemma_predicate(&n, &flag, &LemmaShape::PowerIntoFlag { power: 1, index: 4, target: 0 }),
            Err(FieldError::IndexOutOfRange { index: 4, n: 3 })
        ));
    }

    #[test]
    fn fixed_membership_ignores_basis_choice() {
        let n = op(&[2, 2], 3);
        let f = field(3);
        for flag in enumerate_fixed_flags(&n).unwrap().iter().take(20) {
            // Rebuild each F_i from a scrambled spanning set.
            let rebuilt: Vec<Subspace> = flag
                .spaces()
                .iter()
                .map(|s| {
                    let mut vs: Vec<Vector> = s.basis().to_vec();
                    for i in 1..vs.len() {
                        let prev = vs[i - 1].clone();
                        for (x, y) in vs[i].iter_mut().zip(&prev) {
                            *x = f.add(*x, f.mul(2, *y));
                        }
                    }
                    vs.reverse();
                    Subspace::span(f, 4, &vs)
                })
                .collect();
            let again = FixedFlag::new(rebuilt).unwrap();
            assert_eq!(&again, flag);
            assert!(again.is_fixed_by(&n));
        }
    }

    #[test]
    fn strata_partition_the_fiber() {
        for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
            let n = NilpotentOp::two_block(p, q, field(2)).unwrap();
            let all: HashSet<FixedFlag> = enumerate_fixed_flags(&n).unwrap().into_iter().collect();
            let mut seen = HashSet::new();
            for w in enumerate_strata(p, q).unwrap() {
                let flags = stratum_flags(&n, &w).unwrap();
                assert_eq!(flags.len() as u64, 2u64.pow(w.dim() as u32));
                for f in flags {
                    assert!(f.is_fixed_by(&n));
                    assert!(seen.insert(f), "strata overlap for type ({p},{q})");
                }
            }
            assert_eq!(seen, all);
            assert_eq!(BigInt::from(all.len()), fiber_class(p, q).unwrap().specialize(2));
        }
    }

    #[test]
    fn component_counts() {
        let cases: [(&[u8], u32, u64); 3] = [(&[2, 1, 1], 2, 3), (&[1, 2, 1], 2, 3), (&[2, 2, 1, 1], 2, 9)];
        for (psi, t, expected) in cases {
            let tab = TwoColumnTableau::from_psi(psi).unwrap();
            assert_eq!(count_component_points(&tab, field(t)).unwrap(), expected);
        }
    }

    #[test]
    fn open_strata_lie_in_their_components() {
        for n in 2..=5 {
            for q in 1..=n / 2 {
                let p = n - q;
                let op = NilpotentOp::two_block(p, q, field(3)).unwrap();
                for t in enumerate_standard(p, q).unwrap() {
                    let set = closed_conditions(&normalize(&t), (p, q)).unwrap();
                    for flag in stratum_flags(&op, &stratum_of(&t)).unwrap() {
                        assert!(satisfies(&op, &flag, &set), "{} type ({p},{q})", t.psi_string());
                    }
                }
            }
        }
    }

    #[test]
    fn frame_types_match_on_components() {
        let f = field(2);
        for (p, q) in [(2, 2), (3, 2), (3, 3)] {
            let op = NilpotentOp::two_block(p, q, f).unwrap();
            for t in enumerate_standard(p, q).unwrap() {
                let set = closed_conditions(&normalize(&t), (p, q)).unwrap();
                for flag in component_flags(&t, &op).unwrap() {
                    for frame in set.frames() {
                        let expected: Vec<usize> =
                            [frame.jordan.0, frame.jordan.1].into_iter().filter(|&x| x > 0).collect();
                        assert_eq!(frame_jordan_type(&op, &flag, &frame), expected);
                    }
                }
            }
        }
    }
}
