//! Locally finite linear operators on polynomials, built from first-order
//! differential operators, multiplications, sums and compositions.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{enumerate_kostant, KostantPartition};
use crate::poly::Polynomial;
use crate::raiz::{Raiz, Residue};
use crate::rational::Q;

/// A first-order operator `Σ x_{f(ϑ)} ∂_ϑ`, described by the partial map
/// `ϑ ↦ f(ϑ)` on the parts of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    /// `E(θ) = Σ_{ϑ ∈ E_{i-1}} x_{ϑ⌣θ} ∂_ϑ` for `θ` beginning at `i`.
    E(Raiz),
    /// `Ẽ(θ) = Σ_{ϑ ∈ E_{i-1}} x_ϑ ∂_{ϑ⌣θ}`, including `∂_θ` from the unit.
    ETilde(Raiz),
    /// `B(θ) = Σ_{ϑ ∈ B_{i+1}} x_{θ⌣ϑ} ∂_ϑ` for `θ` ending at `i`.
    B(Raiz),
    /// `BB_i = Σ_{θ ∈ B_{i+1}} x_θ ∂_θ`.
    BSum(Residue),
    /// `EE_i = Σ_{θ ∈ E_{i-1}} x_θ ∂_θ`.
    ESum(Residue),
    /// `x_out ∂_in`; `out` may be the unit, giving a plain derivative.
    XD { out: Raiz, inp: Raiz },
}

impl Field {
    fn rank(&self) -> u32 {
        match self {
            Field::E(t) | Field::ETilde(t) | Field::B(t) => t.rank(),
            Field::BSum(i) | Field::ESum(i) => i.rank(),
            Field::XD { inp, .. } => inp.rank(),
        }
    }

    fn shift(&self) -> DimVec {
        match self {
            Field::E(t) | Field::B(t) => t.dim(),
            Field::ETilde(t) => -&t.dim(),
            Field::BSum(i) | Field::ESum(i) => DimVec::zero(i.rank()),
            Field::XD { out, inp } => &out.dim() - &inp.dim(),
        }
    }

    /// What a part `b` of a monomial is replaced by, if this field acts on it.
    fn image(&self, b: &Raiz) -> Option<Raiz> {
        match self {
            Field::E(t) => {
                let i = t.begins_at()?;
                (b.ends_at() == Some(i.shift(-1))).then(|| b.smile(t).unwrap())
            }
            Field::ETilde(t) => b.frown(t).ok(),
            Field::B(t) => {
                let i = t.ends_at()?;
                (b.begins_at() == Some(i.shift(1))).then(|| t.smile(b).unwrap())
            }
            Field::BSum(i) => (b.begins_at() == Some(i.shift(1))).then_some(*b),
            Field::ESum(i) => (b.ends_at() == Some(i.shift(-1))).then_some(*b),
            Field::XD { out, inp } => (b == inp).then_some(*out),
        }
    }

    fn apply_monomial(&self, a: &KostantPartition, c: Q, out: &mut Polynomial) {
        for (b, m) in a.distinct() {
            if let Some(img) = self.image(&b) {
                out.add_term(a.replace(&b, img).unwrap(), c * Q::from(m));
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::E(t) => write!(f, "E({t})"),
            Field::ETilde(t) => write!(f, "Et({t})"),
            Field::B(t) => write!(f, "B({t})"),
            Field::BSum(i) => write!(f, "BB_{i}"),
            Field::ESum(i) => write!(f, "EE_{i}"),
            Field::XD { out, inp } if out.is_unit() => write!(f, "d[{inp}]"),
            Field::XD { out, inp } => write!(f, "x[{out}]d[{inp}]"),
        }
    }
}

enum Node {
    Zero,
    Scalar(Q),
    Mul(Polynomial),
    Field(Field),
    Sum(Vec<(Q, LinOp)>),
    /// `outer ∘ inner`.
    Compose(LinOp, LinOp),
}

/// A linear operator on polynomials of one rank. Operators built from the
/// generators are homogeneous: they change the dimension vector of every
/// monomial by a fixed `shift`. Sums of operators with different shifts are
/// allowed and have no shift.
#[derive(Clone)]
pub struct LinOp {
    n: u32,
    shift: Option<DimVec>,
    node: Arc<Node>,
}

impl LinOp {
    fn build(n: u32, shift: Option<DimVec>, node: Node) -> LinOp {
        LinOp {
            n,
            shift,
            node: Arc::new(node),
        }
    }

    pub fn zero(n: u32, shift: DimVec) -> LinOp {
        LinOp::build(n, Some(shift), Node::Zero)
    }

    pub fn identity(n: u32) -> LinOp {
        LinOp::scalar(n, Q::ONE)
    }

    pub fn scalar(n: u32, c: Q) -> LinOp {
        if c.is_zero() {
            return LinOp::zero(n, DimVec::zero(n));
        }
        LinOp::build(n, Some(DimVec::zero(n)), Node::Scalar(c))
    }

    /// Multiplication by a homogeneous polynomial of dimension `dim`.
    pub fn mul(p: Polynomial, dim: DimVec) -> Result<LinOp> {
        if p.is_zero() {
            return Ok(LinOp::zero(dim.rank(), dim));
        }
        if p.homogeneous_dim().as_ref() != Some(&dim) {
            return Err(Error::DimensionMismatch(alloc::format!("{p} is not homogeneous of dimension {dim}")));
        }
        Ok(LinOp::build(p.rank(), Some(dim), Node::Mul(p)))
    }

    /// Multiplication by `x_θ`.
    pub fn x(theta: Raiz) -> LinOp {
        LinOp::mul(Polynomial::var(theta), theta.dim()).unwrap()
    }

    pub fn field(f: Field) -> LinOp {
        LinOp::build(f.rank(), Some(f.shift()), Node::Field(f))
    }

    pub fn e(theta: Raiz) -> LinOp {
        LinOp::field(Field::E(theta))
    }

    pub fn etilde(theta: Raiz) -> LinOp {
        LinOp::field(Field::ETilde(theta))
    }

    pub fn b(theta: Raiz) -> LinOp {
        LinOp::field(Field::B(theta))
    }

    pub fn bsum(i: Residue) -> LinOp {
        LinOp::field(Field::BSum(i))
    }

    pub fn esum(i: Residue) -> LinOp {
        LinOp::field(Field::ESum(i))
    }

    pub fn deriv(theta: Raiz) -> LinOp {
        LinOp::xd(Raiz::unit(theta.rank()), theta)
    }

    /// `x_out ∂_in`.
    pub fn xd(out: Raiz, inp: Raiz) -> LinOp {
        if inp.is_unit() {
            return LinOp::zero(inp.rank(), &out.dim() - &inp.dim());
        }
        LinOp::field(Field::XD { out, inp })
    }

    /// `Δ_i = BB_{i-1} - BB_i + c_i`.
    pub fn delta(i: Residue, c: Q) -> LinOp {
        &(&LinOp::bsum(i.shift(-1)) - &LinOp::bsum(i)) + &LinOp::scalar(i.rank(), c)
    }

    /// `Σ c_k op_k`.
    pub fn linear_combination(n: u32, terms: impl IntoIterator<Item = (Q, LinOp)>) -> LinOp {
        let mut flat: Vec<(Q, LinOp)> = Vec::new();
        let mut shift: Option<Option<DimVec>> = None;
        for (c, op) in terms {
            assert_eq!(op.n, n, "mixed ranks");
            shift = match shift {
                None => Some(op.shift.clone()),
                Some(s) if s == op.shift => Some(s),
                Some(_) => Some(None),
            };
            if c.is_zero() {
                continue;
            }
            match &*op.node {
                Node::Zero => {}
                Node::Sum(inner) => flat.extend(inner.iter().map(|(d, o)| (c * *d, o.clone()))),
                _ => flat.push((c, op)),
            }
        }
        let shift = shift.unwrap_or_else(|| Some(DimVec::zero(n)));
        if flat.is_empty() {
            return LinOp::build(n, shift, Node::Zero);
        }
        LinOp::build(n, shift, Node::Sum(flat))
    }

    pub fn scale(&self, c: Q) -> LinOp {
        LinOp::linear_combination(self.n, [(c, self.clone())])
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinOp) -> LinOp {
        assert_eq!(self.n, inner.n, "mixed ranks");
        let shift = match (&self.shift, &inner.shift) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        if self.is_trivially_zero() || inner.is_trivially_zero() {
            return LinOp::build(self.n, shift, Node::Zero);
        }
        LinOp::build(self.n, shift, Node::Compose(self.clone(), inner.clone()))
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &LinOp) -> LinOp {
        &self.compose(other) - &other.compose(self)
    }

    /// `ad(self)^k (other)`.
    pub fn ad_pow(&self, k: u32, other: &LinOp) -> LinOp {
        (0..k).fold(other.clone(), |acc, _| self.commutator(&acc))
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    /// Change of the dimension vector of monomials, if homogeneous. Raising
    /// the grading `deg x^A = -|A|` by `β` corresponds to a shift of `-β`.
    pub fn shift(&self) -> Option<&DimVec> {
        self.shift.as_ref()
    }

    fn is_trivially_zero(&self) -> bool {
        matches!(&*self.node, Node::Zero)
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        self.apply_into(p, Q::ONE, &mut out);
        out
    }

    pub fn apply_monomial(&self, a: &KostantPartition) -> Polynomial {
        self.apply(&Polynomial::monomial(a.clone()))
    }

    /// `out += c · self(p)`.
    fn apply_into(&self, p: &Polynomial, c: Q, out: &mut Polynomial) {
        match &*self.node {
            Node::Zero => {}
            Node::Scalar(s) => out.add_scaled(p, c * *s),
            Node::Mul(m) => out.add_scaled(&(m * p), c),
            Node::Field(f) => {
                for (a, v) in p.terms() {
                    f.apply_monomial(a, *v * c, out);
                }
            }
            Node::Sum(terms) => {
                for (d, op) in terms {
                    op.apply_into(p, c * *d, out);
                }
            }
            Node::Compose(outer, inner) => {
                let mid = inner.apply(p);
                if !mid.is_zero() {
                    outer.apply_into(&mid, c, out);
                }
            }
        }
    }
}

impl Add for &LinOp {
    type Output = LinOp;
    fn add(self, rhs: &LinOp) -> LinOp {
        LinOp::linear_combination(self.n, [(Q::ONE, self.clone()), (Q::ONE, rhs.clone())])
    }
}

impl Sub for &LinOp {
    type Output = LinOp;
    fn sub(self, rhs: &LinOp) -> LinOp {
        LinOp::linear_combination(self.n, [(Q::ONE, self.clone()), (-Q::ONE, rhs.clone())])
    }
}

impl Neg for &LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        self.scale(-Q::ONE)
    }
}

/// Composition.
impl Mul for &LinOp {
    type Output = LinOp;
    fn mul(self, rhs: &LinOp) -> LinOp {
        self.compose(rhs)
    }
}

impl fmt::Display for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            Node::Zero => f.write_str("0"),
            Node::Scalar(c) => write!(f, "{c}"),
            Node::Mul(p) => write!(f, "({p})"),
            Node::Field(x) => write!(f, "{x}"),
            Node::Sum(terms) => {
                f.write_str("(")?;
                for (k, (c, op)) in terms.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    if *c != Q::ONE {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "{op}")?;
                }
                f.write_str(")")
            }
            Node::Compose(a, b) => write!(f, "{a}.{b}"),
        }
    }
}

impl fmt::Debug for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The first monomial of `FK(α)`, in canonical order, on which two operators
/// differ, with both images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub monomial: KostantPartition,
    pub left: Polynomial,
    pub right: Polynomial,
}

pub fn first_difference_on(p: &LinOp, q: &LinOp, basis: &[KostantPartition]) -> Option<Difference> {
    basis.iter().find_map(|a| {
        let left = p.apply_monomial(a);
        let right = q.apply_monomial(a);
        (left != right).then(|| Difference {
            monomial: a.clone(),
            left,
            right,
        })
    })
}

/// Whether `p` and `q` agree on every monomial `x^A`, `A ∈ FK(α)`.
pub fn op_equal_on(p: &LinOp, q: &LinOp, alpha: &DimVec) -> bool {
    first_difference_on(p, q, &enumerate_kostant(alpha)).is_none()
}

/// The matrix of an operator between graded pieces, rows indexed by the
/// target basis and columns by the source basis, both in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceMatrix {
    pub source: DimVec,
    pub target: DimVec,
    pub source_basis: Vec<KostantPartition>,
    pub target_basis: Vec<KostantPartition>,
    pub matrix: Matrix,
}

/// Exact matrix of `op` restricted to the span of `x^A`, `A ∈ FK(α)`.
pub fn matrix_of(op: &LinOp, alpha: &DimVec) -> Result<PieceMatrix> {
    let shift = op
        .shift()
        .ok_or_else(|| Error::DimensionMismatch(alloc::format!("{op} is not homogeneous")))?;
    let target = alpha + shift;
    let source_basis = enumerate_kostant(alpha);
    let target_basis = if target.is_nonnegative() {
        enumerate_kostant(&target)
    } else {
        Vec::new()
    };
    let index: BTreeMap<&KostantPartition, usize> = target_basis.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let mut matrix = Matrix::zeros(target_basis.len(), source_basis.len());
    for (col, a) in source_basis.iter().enumerate() {
        for (b, c) in op.apply_monomial(a).terms() {
            let row = *index
                .get(b)
                .ok_or_else(|| Error::DimensionMismatch(alloc::format!("{op} sends {a} outside the piece {target}")))?;
            matrix[(row, col)] = *c;
        }
    }
    Ok(PieceMatrix {
        source: alpha.clone(),
        target,
        source_basis,
        target_basis,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u32, p: i64, q: i64) -> Raiz {
        Raiz::new(n, p, q).unwrap()
    }

    fn x(n: u32, p: i64, q: i64) -> Polynomial {
        Polynomial::var(r(n, p, q))
    }

    fn res(n: u32, i: i64) -> Residue {
        Residue::new(n, i).unwrap()
    }

    #[test]
    fn etilde_examples() {
        let t = r(2, 0, 0);
        assert_eq!(LinOp::etilde(t).apply(&x(2, 0, 0)), Polynomial::one(2));
        assert_eq!(LinOp::etilde(t).apply(&x(2, -1, 0)), x(2, 1, 1));
        assert!(LinOp::etilde(t).apply(&x(2, 1, 1)).is_zero());
        let sq = &x(2, 0, 0) * &x(2, 0, 0);
        assert_eq!(LinOp::etilde(t).apply(&sq), x(2, 0, 0).scale(Q::from_int(2)));
    }

    #[test]
    fn e_and_b() {
        let i0 = r(2, 0, 0);
        assert_eq!(LinOp::e(i0).apply(&x(2, 1, 1)), x(2, -1, 0));
        assert!(LinOp::e(i0).apply(&Polynomial::one(2)).is_zero());
        assert_eq!(LinOp::b(i0).apply(&x(2, 1, 1)), x(2, 0, 1));
        assert!(LinOp::b(i0).apply(&x(2, 0, 0)).is_zero());
    }

    #[test]
    fn delta_on_one() {
        let c = Q::new(5, 2);
        assert_eq!(LinOp::delta(res(3, 1), c).apply(&Polynomial::one(3)), Polynomial::constant(3, c));
    }

    #[test]
    fn commutator_with_x() {
        let i = r(3, 1, 1);
        let comm = LinOp::etilde(i).commutator(&LinOp::x(i));
        assert!(op_equal_on(&comm, &LinOp::identity(3), &DimVec::from_vec(alloc::vec![1, 2, 1]).unwrap()));
    }

    #[test]
    fn matrices() {
        let alpha = DimVec::from_vec(alloc::vec![1, 1]).unwrap();
        let id = matrix_of(&LinOp::identity(2), &alpha).unwrap();
        assert_eq!(id.matrix, Matrix::identity(3));
        let e = matrix_of(&LinOp::etilde(r(2, 0, 0)), &alpha).unwrap();
        assert_eq!(e.target_basis.len(), 1);
        assert_eq!((e.matrix.rows(), e.matrix.cols()), (1, 3));
        let below = matrix_of(&LinOp::etilde(r(2, 0, 0)), &DimVec::zero(2)).unwrap();
        assert_eq!((below.matrix.rows(), below.matrix.cols()), (0, 1));
    }

    #[test]
    fn composition_is_matrix_product() {
        let alpha = DimVec::from_vec(alloc::vec![2, 1]).unwrap();
        let a = LinOp::b(r(2, 0, 0));
        let b = LinOp::etilde(r(2, 1, 1));
        let ab = matrix_of(&a.compose(&b), &alpha).unwrap();
        let mb = matrix_of(&b, &alpha).unwrap();
        let ma = matrix_of(&a, &mb.target).unwrap();
        assert_eq!(ab.matrix, &ma.matrix * &mb.matrix);
    }
}
