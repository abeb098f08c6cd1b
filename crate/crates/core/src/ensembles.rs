//! Matrix spaces P_n(F), Gaussian and Haar sampling, radial decomposition,
//! minors and the minor process.
//!
//! P_n(C) is the set of complex Hermitian matrices, P_n(R) the Hermitian
//! matrices iX with X real antisymmetric, and P_n(H) the 2n x 2n Hermitian
//! matrices iX with X quaternionic in the 2x2-block representation. All three
//! are stored as complex matrices of ambient size with a structure tag.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng as RngTrait;
use rand_distr::{Distribution, StandardNormal};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ChamberType, Field, FieldContext};
use crate::gtpolytope::GTPattern;
use crate::linalg::{self, CMatrix};
use crate::quaternion::{embed, Quaternion};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Structure tag of a [`StructuredMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "hermitian_P")]
    HermitianP,
    #[serde(rename = "rectangular_M")]
    RectangularM,
    #[serde(rename = "unitary_U")]
    UnitaryU,
}

/// An element of P_n(F), M_{n,k}(F) or U_n(F), stored as a complex matrix of
/// ambient size together with its context.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuredMatrix {
    pub ctx: FieldContext,
    pub kind: MatrixKind,
    pub data: CMatrix,
}

impl StructuredMatrix {
    /// Number of columns over F (differs from n only for rectangular kinds).
    pub fn cols_over_f(&self) -> usize {
        match self.ctx.field {
            Field::H => self.data.ncols() / 2,
            _ => self.data.ncols(),
        }
    }

    /// The invariant scalar product on P_n(F): b tr(MN), b = 1 for C and
    /// b = 1/2 for R, H.
    pub fn scalar_product_p(&self, other: &StructuredMatrix) -> f64 {
        let b = match self.ctx.field {
            Field::C => 1.0,
            Field::R | Field::H => 0.5,
        };
        let tr: Complex64 = (&self.data * &other.data).trace();
        b * tr.re
    }

    /// The Euclidean scalar product on M_{n,k}(F): a Re tr(MN*), a = 1 for R
    /// and a = 2 for C, H. Over the complex representation of H this is the
    /// plain trace.
    pub fn scalar_product_m(&self, other: &StructuredMatrix) -> f64 {
        let tr: Complex64 = (&self.data * other.data.adjoint()).trace();
        match self.ctx.field {
            Field::R => tr.re,
            Field::C => 2.0 * tr.re,
            Field::H => tr.re,
        }
    }
}

/// A point of the Weyl chamber C_n: the radial coordinates of a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPoint {
    pub ctx: FieldContext,
    pub coords: Vec<f64>,
}

impl RadialPoint {
    /// Validates the chamber conditions: weakly decreasing everywhere,
    /// nonnegative for types B and C, last coordinate free in sign for D.
    pub fn new(ctx: FieldContext, coords: Vec<f64>) -> Result<Self> {
        let nt = ctx.n_tilde();
        if coords.len() != nt {
            return Err(Error::ShapeMismatch(format!(
                "expected {} radial coordinates, got {}",
                nt,
                coords.len()
            )));
        }
        let slack = 1e-12;
        let chamber = ctx.chamber_type();
        let mut check = coords.clone();
        if chamber == ChamberType::D {
            if let Some(last) = check.last_mut() {
                *last = last.abs();
            }
        }
        for w in check.windows(2) {
            if w[0] < w[1] - slack {
                return Err(Error::NotInChamber {
                    chamber: chamber_name(chamber),
                    reason: format!("{} < {}", w[0], w[1]),
                });
            }
        }
        match chamber {
            ChamberType::B | ChamberType::C => {
                if let Some(&last) = check.last() {
                    if last < -slack {
                        return Err(Error::NotInChamber {
                            chamber: chamber_name(chamber),
                            reason: format!("negative coordinate {last}"),
                        });
                    }
                }
            }
            ChamberType::A | ChamberType::D => {}
        }
        Ok(RadialPoint { ctx, coords })
    }

    /// True if the point lies in the open chamber (where the uniform measure
    /// on the Gelfand-Tsetlin polytope is full-dimensional).
    pub fn is_interior(&self) -> bool {
        let c = &self.coords;
        let strict = c.windows(2).all(|w| w[0] > w[1]);
        match self.ctx.chamber_type() {
            ChamberType::A => strict,
            ChamberType::B | ChamberType::C => strict && c.last().map_or(true, |&x| x > 0.0),
            ChamberType::D => {
                let k = c.len();
                if k == 0 {
                    return true;
                }
                let head_strict = c[..k - 1].windows(2).all(|w| w[0] > w[1]);
                head_strict && (k < 2 || c[k - 2] > c[k - 1].abs())
            }
        }
    }
}

fn chamber_name(c: ChamberType) -> &'static str {
    match c {
        ChamberType::A => "A",
        ChamberType::B => "B",
        ChamberType::C => "C",
        ChamberType::D => "D",
    }
}

fn std_normal<R: RngTrait>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// The block-diagonal chamber representative Omega_n(lambda).
pub fn omega(lambda: &RadialPoint) -> StructuredMatrix {
    let ctx = lambda.ctx;
    let d = ctx.ambient_dim();
    let mut m = CMatrix::zeros(d, d);
    match ctx.field {
        Field::C => {
            for (i, &x) in lambda.coords.iter().enumerate() {
                m[(i, i)] = Complex64::new(x, 0.0);
            }
        }
        Field::R => {
            for (i, &x) in lambda.coords.iter().enumerate() {
                // omega(alpha) = ((0, i a), (-i a, 0))
                m[(2 * i, 2 * i + 1)] = I * x;
                m[(2 * i + 1, 2 * i)] = -I * x;
            }
        }
        Field::H => {
            for (i, &x) in lambda.coords.iter().enumerate() {
                m[(2 * i, 2 * i)] = Complex64::new(x, 0.0);
                m[(2 * i + 1, 2 * i + 1)] = Complex64::new(-x, 0.0);
            }
        }
    }
    StructuredMatrix { ctx, kind: MatrixKind::HermitianP, data: m }
}

/// Omega_n^k: the representative with k leading ones.
pub fn omega_rank(ctx: FieldContext, k: usize) -> Result<StructuredMatrix> {
    let nt = ctx.n_tilde();
    if k > nt {
        return Err(Error::InvalidArgument(format!("rank {k} exceeds n-tilde {nt}")));
    }
    let mut coords = vec![0.0; nt];
    for c in coords.iter_mut().take(k) {
        *c = 1.0;
    }
    Ok(omega(&RadialPoint::new(ctx, coords)?))
}

/// Standard Gaussian sample on P_n(F) for the invariant scalar product.
pub fn sample_gaussian_hermitian<R: RngTrait>(ctx: FieldContext, rng: &mut R) -> StructuredMatrix {
    let n = ctx.n;
    let data = match ctx.field {
        Field::C => {
            let mut m = CMatrix::zeros(n, n);
            for i in 0..n {
                m[(i, i)] = Complex64::new(std_normal(rng), 0.0);
                for j in (i + 1)..n {
                    let z = Complex64::new(std_normal(rng), std_normal(rng)) / 2f64.sqrt();
                    m[(i, j)] = z;
                    m[(j, i)] = z.conj();
                }
            }
            m
        }
        Field::R => {
            // M = iX with X real antisymmetric, X_ij ~ N(0,1) above diagonal.
            let mut m = CMatrix::zeros(n, n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let x = std_normal(rng);
                    m[(i, j)] = I * x;
                    m[(j, i)] = -I * x;
                }
            }
            m
        }
        Field::H => {
            // M = iX with X quaternionic antihermitian: diagonal entries are
            // purely imaginary quaternions (3 unit-variance coordinates),
            // off-diagonal entries have 4 coordinates of variance 1/2.
            let mut q = vec![vec![Quaternion::ZERO; n]; n];
            for i in 0..n {
                let a1 = std_normal(rng);
                let b0 = std_normal(rng);
                let b1 = std_normal(rng);
                q[i][i] = Quaternion::new(Complex64::new(0.0, a1), Complex64::new(b0, b1));
                for j in (i + 1)..n {
                    let s = 0.5f64.sqrt();
                    let e = Quaternion::new(
                        Complex64::new(std_normal(rng) * s, std_normal(rng) * s),
                        Complex64::new(std_normal(rng) * s, std_normal(rng) * s),
                    );
                    q[i][j] = e;
                    q[j][i] = Quaternion::ZERO - e.conj();
                }
            }
            embed(&q).map(|z| I * z)
        }
    };
    StructuredMatrix { ctx, kind: MatrixKind::HermitianP, data }
}

/// Standard Gaussian sample on M_{n,k}(F).
pub fn sample_gaussian_rectangular<R: RngTrait>(
    ctx: FieldContext,
    k: usize,
    rng: &mut R,
) -> Result<StructuredMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = ctx.n;
    let data = match ctx.field {
        Field::R => {
            DMatrix::from_fn(n, k, |_, _| Complex64::new(std_normal(rng), 0.0))
        }
        Field::C => {
            let s = 0.5f64.sqrt();
            DMatrix::from_fn(n, k, |_, _| {
                Complex64::new(std_normal(rng) * s, std_normal(rng) * s)
            })
        }
        Field::H => {
            let s = 0.5f64.sqrt();
            let q: Vec<Vec<Quaternion>> = (0..n)
                .map(|_| {
                    (0..k)
                        .map(|_| {
                            Quaternion::new(
                                Complex64::new(std_normal(rng) * s, std_normal(rng) * s),
                                Complex64::new(std_normal(rng) * s, std_normal(rng) * s),
                            )
                        })
                        .collect()
                })
                .collect();
            embed(&q)
        }
    };
    Ok(StructuredMatrix { ctx, kind: MatrixKind::RectangularM, data })
}

/// Haar-distributed element of U_n(F): the unitary group for C, SO(n) for R,
/// Sp(n) for H (embedded in U(2n)).
pub fn sample_haar_unitary<R: RngTrait>(ctx: FieldContext, rng: &mut R) -> StructuredMatrix {
    let n = ctx.n;
    let data = match ctx.field {
        Field::C => {
            let g = DMatrix::from_fn(n, n, |_, _| {
                Complex64::new(std_normal(rng), std_normal(rng))
            });
            let qr = g.qr();
            let mut q = qr.q();
            let r = qr.r();
            // Normalise the phases of the R diagonal to make the law Haar.
            for j in 0..n {
                let d = r[(j, j)];
                let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
                for i in 0..n {
                    q[(i, j)] *= phase;
                }
            }
            q
        }
        Field::R => {
            let g = DMatrix::<f64>::from_fn(n, n, |_, _| std_normal(rng));
            let qr = g.qr();
            let mut q = qr.q();
            let r = qr.r();
            for j in 0..n {
                if r[(j, j)] < 0.0 {
                    for i in 0..n {
                        q[(i, j)] = -q[(i, j)];
                    }
                }
            }
            // Fold the det = -1 component onto SO(n).
            if q.determinant() < 0.0 {
                for i in 0..n {
                    q[(i, n - 1)] = -q[(i, n - 1)];
                }
            }
            q.map(|x| Complex64::new(x, 0.0))
        }
        Field::H => {
            // Modified Gram-Schmidt over the quaternions (columns as a right
            // module), applied to a quaternionic Ginibre matrix.
            let mut a: Vec<Vec<Quaternion>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            Quaternion::new(
                                Complex64::new(std_normal(rng), std_normal(rng)),
                                Complex64::new(std_normal(rng), std_normal(rng)),
                            )
                        })
                        .collect()
                })
                .collect();
            for j in 0..n {
                for i in 0..j {
                    // c = <q_i, a_j>
                    let mut c = Quaternion::ZERO;
                    for row in a.iter() {
                        c = c + row[i].conj() * row[j];
                    }
                    for row in a.iter_mut() {
                        let t = row[i] * c;
                        row[j] = row[j] - t;
                    }
                }
                let norm: f64 = a.iter().map(|row| row[j].norm_sqr()).sum::<f64>().sqrt();
                for row in a.iter_mut() {
                    row[j] = row[j].scale(1.0 / norm);
                }
            }
            embed(&a)
        }
    };
    StructuredMatrix { ctx, kind: MatrixKind::UnitaryU, data }
}

/// Conjugation U M U*.
pub fn conjugate(u: &StructuredMatrix, m: &StructuredMatrix) -> StructuredMatrix {
    StructuredMatrix {
        ctx: m.ctx,
        kind: m.kind,
        data: &u.data * &m.data * u.data.adjoint(),
    }
}

/// The radial part of a Hermitian structured matrix: the unique chamber point
/// lambda with M = U Omega_n(lambda) U*.
pub fn radial_part(m: &StructuredMatrix) -> Result<RadialPoint> {
    if m.kind != MatrixKind::HermitianP {
        return Err(Error::ShapeMismatch("radial part requires a hermitian_P matrix".into()));
    }
    let ctx = m.ctx;
    let vals = linalg::hermitian_eigenvalues_desc(&m.data)?;
    radial_from_eigenvalues(ctx, &vals, &m.data)
}

fn radial_from_eigenvalues(ctx: FieldContext, vals: &[f64], data: &CMatrix) -> Result<RadialPoint> {
    let nt = ctx.n_tilde();
    let coords = match ctx.field {
        Field::C => vals.to_vec(),
        Field::H => {
            // Eigenvalues come in +/- pairs; symmetrise numerically.
            let d = vals.len();
            let mut v: Vec<f64> =
                (0..nt).map(|i| 0.5 * (vals[i] - vals[d - 1 - i])).map(|x| x.max(0.0)).collect();
            v.sort_by(|a, b| b.partial_cmp(a).unwrap());
            v
        }
        Field::R => {
            let d = vals.len();
            let mut v: Vec<f64> =
                (0..nt).map(|i| 0.5 * (vals[i] - vals[d - 1 - i])).map(|x| x.max(0.0)).collect();
            v.sort_by(|a, b| b.partial_cmp(a).unwrap());
            if ctx.chamber_type() == ChamberType::D && nt > 0 {
                // Both +/- lambda_last are eigenvalues; the chamber
                // representative takes its sign from the Pfaffian of the real
                // antisymmetric matrix X = -iM.
                let x = DMatrix::from_fn(ctx.n, ctx.n, |i, j| data[(i, j)].im);
                if linalg::pfaffian(&x) < 0.0 {
                    v[nt - 1] = -v[nt - 1];
                }
            }
            v
        }
    };
    RadialPoint::new(ctx, coords)
}

/// The main minor of order k: the leading principal submatrix over F.
pub fn minor(m: &StructuredMatrix, k: usize) -> Result<StructuredMatrix> {
    if m.kind == MatrixKind::RectangularM {
        return Err(Error::ShapeMismatch("minor of a rectangular matrix".into()));
    }
    let n = m.ctx.n;
    if k < 1 || k > n {
        return Err(Error::MinorOutOfRange { k, n });
    }
    let sub = m.ctx.field;
    let ctx = FieldContext::new(sub, k)?;
    let side = ctx.ambient_dim();
    let data = m.data.view((0, 0), (side, side)).into_owned();
    Ok(StructuredMatrix { ctx, kind: m.kind, data })
}

/// The minor process X(M): the radial parts of all main minors. For F = H the
/// pattern also contains the half-levels, read off the complex minors of odd
/// order 2r - 1.
pub fn minor_process(m: &StructuredMatrix) -> Result<GTPattern> {
    if m.kind != MatrixKind::HermitianP {
        return Err(Error::ShapeMismatch("minor process requires a hermitian_P matrix".into()));
    }
    let ctx = m.ctx;
    let mut levels = Vec::new();
    match ctx.field {
        Field::C | Field::R => {
            for k in 1..=ctx.n {
                levels.push(radial_part(&minor(m, k)?)?.coords);
            }
        }
        Field::H => {
            for r in 1..=ctx.n {
                // Half-level r - 1/2: ordered absolute values of the r
                // largest eigenvalues of the complex minor of order 2r - 1.
                let side = 2 * r - 1;
                let sub = m.data.view((0, 0), (side, side)).into_owned();
                let vals = linalg::hermitian_eigenvalues_desc(&sub)?;
                let mut half: Vec<f64> = vals[..r].iter().map(|x| x.abs()).collect();
                half.sort_by(|a, b| b.partial_cmp(a).unwrap());
                levels.push(half);
                levels.push(radial_part(&minor(m, r)?)?.coords);
            }
        }
    }
    GTPattern::new(ctx, levels)
}

impl Serialize for StructuredMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StructuredMatrix", 4)?;
        st.serialize_field("field", self.ctx.field.name())?;
        st.serialize_field("n", &self.ctx.n)?;
        let kind = match self.kind {
            MatrixKind::HermitianP => "hermitian_P",
            MatrixKind::RectangularM => "rectangular_M",
            MatrixKind::UnitaryU => "unitary_U",
        };
        st.serialize_field("kind", kind)?;
        let rows: Vec<Vec<[f64; 2]>> = (0..self.data.nrows())
            .map(|i| (0..self.data.ncols()).map(|j| [self.data[(i, j)].re, self.data[(i, j)].im]).collect())
            .collect();
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct MatrixWire {
    field: String,
    n: usize,
    kind: String,
    rows: Vec<Vec<[f64; 2]>>,
}

impl<'de> Deserialize<'de> for StructuredMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let wire = MatrixWire::deserialize(deserializer)?;
        let field = Field::parse(&wire.field).map_err(D::Error::custom)?;
        let ctx = FieldContext::new(field, wire.n).map_err(D::Error::custom)?;
        let kind = match wire.kind.as_str() {
            "hermitian_P" => MatrixKind::HermitianP,
            "rectangular_M" => MatrixKind::RectangularM,
            "unitary_U" => MatrixKind::UnitaryU,
            other => return Err(D::Error::custom(format!("unknown kind `{other}`"))),
        };
        let nrows = wire.rows.len();
        let ncols = wire.rows.first().map_or(0, |r| r.len());
        if wire.rows.iter().any(|r| r.len() != ncols) {
            return Err(D::Error::custom("ragged rows"));
        }
        let data = DMatrix::from_fn(nrows, ncols, |i, j| {
            Complex64::new(wire.rows[i][j][0], wire.rows[i][j][1])
        });
        Ok(StructuredMatrix { ctx, kind, data })
    }
}

/// Sum of two Hermitian structured matrices.
pub fn add(a: &StructuredMatrix, b: &StructuredMatrix) -> StructuredMatrix {
    StructuredMatrix { ctx: a.ctx, kind: a.kind, data: &a.data + &b.data }
}

/// M Omega M* for a rectangular M and a Hermitian Omega of matching size.
pub fn sandwich(m: &StructuredMatrix, core: &StructuredMatrix) -> StructuredMatrix {
    StructuredMatrix {
        ctx: m.ctx,
        kind: MatrixKind::HermitianP,
        data: &m.data * &core.data * m.data.adjoint(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    fn ctx(field: Field, n: usize) -> FieldContext {
        FieldContext::new(field, n).unwrap()
    }

    #[test]
    fn omega_matches_paper_blocks() {
        // R, n = 3, lambda = (a): top-left omega(a) block and a zero corner.
        let a = 1.25;
        let lam = RadialPoint::new(ctx(Field::R, 3), vec![a]).unwrap();
        let m = omega(&lam);
        assert_eq!(m.data[(0, 1)], I * a);
        assert_eq!(m.data[(1, 0)], -I * a);
        assert_eq!(m.data[(2, 2)], ZERO);

        // H, n = 2: diag(a, -a, b, -b).
        let lam = RadialPoint::new(ctx(Field::H, 2), vec![2.0, 0.5]).unwrap();
        let m = omega(&lam);
        let d: Vec<f64> = (0..4).map(|i| m.data[(i, i)].re).collect();
        assert_eq!(d, vec![2.0, -2.0, 0.5, -0.5]);
    }

    #[test]
    fn radial_round_trip_diagonal() {
        let lam = RadialPoint::new(ctx(Field::C, 3), vec![2.0, 1.0, 0.0]).unwrap();
        let back = radial_part(&omega(&lam)).unwrap();
        for (x, y) in back.coords.iter().zip(&lam.coords) {
            assert!((x - y).abs() < 1e-10);
        }
        // Type D chamber admits a negative last coordinate.
        let lam = RadialPoint::new(ctx(Field::R, 2), vec![-1.5]).unwrap();
        let back = radial_part(&omega(&lam)).unwrap();
        assert!((back.coords[0] + 1.5).abs() < 1e-10);
    }

    #[test]
    fn radial_round_trip_under_conjugation() {
        let mut rng = rng_from_seed(42);
        for (field, n) in [(Field::C, 4), (Field::R, 5), (Field::R, 4), (Field::H, 3)] {
            let c = ctx(field, n);
            for trial in 0..20 {
                let mut coords: Vec<f64> = (0..c.n_tilde()).map(|_| rng.random::<f64>() * 3.0).collect();
                coords.sort_by(|a, b| b.partial_cmp(a).unwrap());
                if c.chamber_type() == ChamberType::D && trial % 2 == 0 {
                    let k = coords.len();
                    coords[k - 1] = -coords[k - 1];
                }
                let lam = RadialPoint::new(c, coords.clone()).unwrap();
                let u = sample_haar_unitary(c, &mut rng);
                let m = conjugate(&u, &omega(&lam));
                let back = radial_part(&m).unwrap();
                for (x, y) in back.coords.iter().zip(&coords) {
                    assert!((x - y).abs() < 1e-9, "{field:?} n={n}: {back:?} vs {coords:?}");
                }
            }
        }
    }

    #[test]
    fn haar_samples_are_structured_unitaries() {
        let mut rng = rng_from_seed(1);
        for (field, n) in [(Field::C, 5), (Field::R, 6), (Field::H, 3)] {
            let c = ctx(field, n);
            let u = sample_haar_unitary(c, &mut rng);
            assert!(linalg::unitarity_defect(&u.data) < 1e-10);
            match field {
                Field::R => {
                    let real = DMatrix::from_fn(n, n, |i, j| u.data[(i, j)].re);
                    assert!((real.determinant() - 1.0).abs() < 1e-8);
                }
                Field::H => {
                    assert!(crate::quaternion::structure_defect(&u.data) < 1e-10);
                }
                Field::C => {}
            }
        }
    }

    #[test]
    fn haar_first_column_is_uniform_on_sphere() {
        // The first coordinate of Ue has the beta-type sphere-marginal law:
        // for SO(n), P(|u_1| <= t) with density proportional to
        // (1 - x^2)^{(n-3)/2} on [-1, 1]. KS test for n = 4.
        use crate::quad::integrate;
        use crate::stats::ks_test;
        let n = 4;
        let c = ctx(Field::R, n);
        let mut rng = rng_from_seed(5);
        let mut xs: Vec<f64> = (0..4000)
            .map(|_| sample_haar_unitary(c, &mut rng).data[(0, 0)].re)
            .collect();
        let norm = integrate(|x| (1.0 - x * x).powf((n as f64 - 3.0) / 2.0), -1.0, 1.0, 1e-10);
        let cdf = move |t: f64| {
            integrate(|x| (1.0 - x * x).powf((n as f64 - 3.0) / 2.0), -1.0, t.clamp(-1.0, 1.0), 1e-10)
                / norm
        };
        let (d, crit, pass) = ks_test(&mut xs, cdf, 0.01);
        assert!(pass, "KS {d} >= {crit}");
    }

    #[test]
    fn gaussian_second_moment_matches_dimension() {
        // E<M, M> = dim P_n(F), within 3 Monte Carlo standard errors.
        let mut rng = rng_from_seed(9);
        for (field, n) in [(Field::C, 1), (Field::C, 3), (Field::R, 2), (Field::R, 5), (Field::H, 1), (Field::H, 2)] {
            let c = ctx(field, n);
            let vals: Vec<f64> = (0..4000)
                .map(|_| {
                    let m = sample_gaussian_hermitian(c, &mut rng);
                    m.scalar_product_p(&m)
                })
                .collect();
            let (mean, se) = crate::stats::mean_se(&vals);
            let dim = c.dim_p() as f64;
            assert!((mean - dim).abs() < 3.0 * se, "{field:?} n={n}: mean {mean} vs dim {dim} (se {se})");
        }
    }

    #[test]
    fn rectangular_second_moment_matches_dimension() {
        let mut rng = rng_from_seed(10);
        for (field, n, k) in [(Field::R, 1, 1), (Field::C, 1, 1), (Field::H, 2, 3), (Field::C, 3, 2)] {
            let c = ctx(field, n);
            let vals: Vec<f64> = (0..4000)
                .map(|_| {
                    let m = sample_gaussian_rectangular(c, k, &mut rng).unwrap();
                    m.scalar_product_m(&m)
                })
                .collect();
            let (mean, se) = crate::stats::mean_se(&vals);
            let dim = c.dim_m(k) as f64;
            assert!((mean - dim).abs() < 3.0 * se, "{field:?} n={n} k={k}: mean {mean} vs {dim}");
        }
    }

    #[test]
    fn hermitian_gaussian_lies_in_p_n() {
        let mut rng = rng_from_seed(3);
        let m = sample_gaussian_hermitian(ctx(Field::R, 4), &mut rng);
        assert!(linalg::hermiticity_defect(&m.data) < 1e-12);
        // Entries are purely imaginary for F = R.
        for i in 0..4 {
            for j in 0..4 {
                assert!(m.data[(i, j)].re.abs() < 1e-12);
            }
        }
        let m = sample_gaussian_hermitian(ctx(Field::H, 2), &mut rng);
        assert!(linalg::hermiticity_defect(&m.data) < 1e-12);
        // -iM is quaternion-structured.
        let x = m.data.map(|z| -I * z);
        assert!(crate::quaternion::structure_defect(&x) < 1e-12);
    }

    #[test]
    fn minor_of_diagonal_truncates() {
        let lam = RadialPoint::new(ctx(Field::C, 3), vec![3.0, 2.0, 1.0]).unwrap();
        let m = omega(&lam);
        let sub = minor(&m, 2).unwrap();
        assert_eq!(sub.kind, MatrixKind::HermitianP);
        let r = radial_part(&sub).unwrap();
        assert_eq!(r.coords, vec![3.0, 2.0]);
        assert!(minor(&m, 4).is_err());
        assert_eq!(minor(&m, 3).unwrap().data, m.data);
    }

    #[test]
    fn minor_process_of_diagonal_is_truncation() {
        let lam = RadialPoint::new(ctx(Field::C, 3), vec![2.0, 1.0, 0.0]).unwrap();
        let pat = minor_process(&omega(&lam)).unwrap();
        assert_eq!(pat.level(3), &[2.0, 1.0, 0.0]);
        assert_eq!(pat.level(2), &[2.0, 1.0]);
    }

    #[test]
    fn serialization_round_trip() {
        let mut rng = rng_from_seed(77);
        let m = sample_gaussian_hermitian(ctx(Field::H, 2), &mut rng);
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains("\"field\":\"H\""));
        assert!(text.contains("\"kind\":\"hermitian_P\""));
        let back: StructuredMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);
    }
}
