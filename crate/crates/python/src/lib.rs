//! Python bindings: the unimodular-matrix type plus the sums, counts, and
//! crossing numbers as plain functions. Rationals cross the boundary as
//! (numerator, denominator) tuples; the point at infinity is (n, 0).

use num_bigint::BigInt;
use num_traits::Zero;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hardy_sums::exact::{BoundaryPoint, Rational};
use hardy_sums::lattice::BruteForceBudget;
use hardy_sums::modgroup;

type CrossingTuple = ((BigInt, BigInt), (BigInt, BigInt), i32);

fn err(e: hardy_sums::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_tuple(x: &Rational) -> (BigInt, BigInt) {
    (x.numer().clone(), x.denom().clone())
}

fn to_boundary(num: BigInt, den: BigInt) -> PyResult<BoundaryPoint> {
    if den.is_zero() {
        if num.is_zero() {
            return Err(PyValueError::new_err("0/0 is not a boundary point"));
        }
        return Ok(BoundaryPoint::Infinity);
    }
    Ok(BoundaryPoint::Finite(Rational::new(num, den)))
}

fn from_boundary(p: &BoundaryPoint) -> (BigInt, BigInt) {
    match p {
        BoundaryPoint::Infinity => (BigInt::from(1), BigInt::zero()),
        BoundaryPoint::Finite(x) => to_tuple(x),
    }
}

/// A 2x2 integer matrix of determinant 1.
#[pyclass(name = "UniModMatrix", from_py_object)]
#[derive(Clone)]
struct PyUniModMatrix {
    inner: modgroup::UniModMatrix,
}

#[pymethods]
impl PyUniModMatrix {
    #[new]
    fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> PyResult<Self> {
        Ok(PyUniModMatrix {
            inner: modgroup::UniModMatrix::new(a, b, c, d).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity() -> Self {
        PyUniModMatrix {
            inner: modgroup::UniModMatrix::identity(),
        }
    }

    #[staticmethod]
    fn t(n: BigInt) -> Self {
        PyUniModMatrix {
            inner: modgroup::UniModMatrix::t_pow(n),
        }
    }

    #[staticmethod]
    fn s() -> Self {
        PyUniModMatrix {
            inner: modgroup::UniModMatrix::s(),
        }
    }

    #[staticmethod]
    fn v() -> Self {
        PyUniModMatrix {
            inner: modgroup::UniModMatrix::v(),
        }
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.inner.a.clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.inner.b.clone()
    }

    #[getter]
    fn c(&self) -> BigInt {
        self.inner.c.clone()
    }

    #[getter]
    fn d(&self) -> BigInt {
        self.inner.d.clone()
    }

    fn __mul__(&self, other: &PyUniModMatrix) -> Self {
        PyUniModMatrix {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> Self {
        PyUniModMatrix {
            inner: self.inner.neg(),
        }
    }

    fn inv(&self) -> Self {
        PyUniModMatrix {
            inner: self.inner.inv(),
        }
    }

    fn in_gamma_theta(&self) -> bool {
        self.inner.in_gamma_theta()
    }

    fn in_gamma0_2(&self) -> bool {
        self.inner.in_gamma0_2()
    }

    /// Moebius action on a boundary point (num, den); den = 0 means infinity.
    fn moebius(&self, num: BigInt, den: BigInt) -> PyResult<(BigInt, BigInt)> {
        Ok(from_boundary(&self.inner.moebius(&to_boundary(num, den)?)))
    }

    /// The cusp A·i∞ as (num, den).
    fn cusp(&self) -> (BigInt, BigInt) {
        from_boundary(&self.inner.cusp())
    }

    /// The Hardy sum of this matrix (gamma_theta only).
    fn frak_s(&self) -> PyResult<BigInt> {
        hardy_sums::hardy::s_matrix(&self.inner).map_err(err)
    }

    /// The integer Dedekind symbol.
    fn dedekind_symbol(&self) -> PyResult<BigInt> {
        hardy_sums::dedekind::dedekind_symbol(&self.inner).map_err(err)
    }

    /// The character value Phi - 3S (gamma_theta only).
    fn chi_theta(&self) -> PyResult<BigInt> {
        hardy_sums::hardy::chi_theta(&self.inner).map_err(err)
    }

    /// Generator-word decomposition: (sign, [n0, n1, ...]).
    fn decompose(&self) -> PyResult<(i8, Vec<BigInt>)> {
        let w = modgroup::decompose_theta(&self.inner).map_err(err)?;
        Ok((w.sign, w.exponents))
    }

    fn __richcmp__(&self, other: &PyUniModMatrix, op: pyo3::basic::CompareOp) -> PyResult<bool> {
        match op {
            pyo3::basic::CompareOp::Eq => Ok(self.inner == other.inner),
            pyo3::basic::CompareOp::Ne => Ok(self.inner != other.inner),
            _ => Err(PyValueError::new_err("matrices are not ordered")),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "UniModMatrix({}, {}, {}, {})",
            self.inner.a, self.inner.b, self.inner.c, self.inner.d
        )
    }
}

#[pyfunction]
fn gcd(a: BigInt, b: BigInt) -> BigInt {
    hardy_sums::exact::gcd(&a, &b)
}

#[pyfunction]
fn sign(n: BigInt) -> i32 {
    hardy_sums::exact::sign(&n)
}

/// Sawtooth of num/den as a (num, den) tuple.
#[pyfunction]
fn sawtooth(num: BigInt, den: BigInt) -> PyResult<(BigInt, BigInt)> {
    if den.is_zero() {
        return Err(PyValueError::new_err("zero denominator"));
    }
    Ok(to_tuple(&hardy_sums::exact::sawtooth(&Rational::new(
        num, den,
    ))))
}

/// Dedekind sum s(d, c) by direct summation, as (num, den).
#[pyfunction]
fn dedekind(d: BigInt, c: BigInt) -> PyResult<(BigInt, BigInt)> {
    Ok(to_tuple(
        &hardy_sums::dedekind::dedekind_naive(&d, &c).map_err(err)?,
    ))
}

/// Dedekind sum s(d, c) via the reciprocity recursion, as (num, den).
#[pyfunction]
fn dedekind_fast(d: BigInt, c: BigInt) -> PyResult<(BigInt, BigInt)> {
    Ok(to_tuple(
        &hardy_sums::dedekind::dedekind_fast(&d, &c).map_err(err)?,
    ))
}

/// Rademacher cocycle of two matrices.
#[pyfunction]
fn rademacher_cocycle(a: &PyUniModMatrix, b: &PyUniModMatrix) -> i32 {
    hardy_sums::dedekind::rademacher_cocycle(&a.inner, &b.inner)
}

/// Hardy sum S4(d, c).
#[pyfunction]
fn s4(d: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::hardy::s4_naive(&d, &c).map_err(err)
}

/// Hardy sum S4(d, c) evaluated through Dedekind sums.
#[pyfunction]
fn s4_via_dedekind(d: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::hardy::s4_via_dedekind(&d, &c).map_err(err)
}

/// Hardy sum S(d, c).
#[pyfunction]
fn hardy_s(d: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::hardy::s_naive(&d, &c).map_err(err)
}

/// The gamma0(2) Hardy sum on a first column (a, c).
#[pyfunction]
fn frak_s4(a: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::hardy::s4_cusp(&a, &c).map_err(err)
}

/// Rebuild a matrix from a generator word (sign, [n0, n1, ...]).
#[pyfunction]
fn compose_word(sign: i8, exponents: Vec<BigInt>) -> PyResult<PyUniModMatrix> {
    let word = modgroup::GeneratorWord::new(sign, exponents).map_err(err)?;
    Ok(PyUniModMatrix {
        inner: modgroup::compose_word(&word),
    })
}

/// Triangle lattice count over Z^2 (closed form).
#[pyfunction]
fn count_triangle(d: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::lattice::count_triangle_z2_closed(&d, &c).map_err(err)
}

/// Triangle lattice count over (2Z)^2 (corrected closed form).
#[pyfunction]
fn count_triangle_even(d: BigInt, c: BigInt) -> PyResult<BigInt> {
    hardy_sums::lattice::count_triangle_2z2_closed(&d, &c).map_err(err)
}

/// Tetrahedron lattice count for pairwise coprime sides (closed form).
#[pyfunction]
fn count_tetra(u: BigInt, v: BigInt, w: BigInt) -> PyResult<BigInt> {
    hardy_sums::lattice::count_tetra_mordell(&u, &v, &w).map_err(err)
}

/// D(d, c, 2) with d even: (brute, printed, corrected, delta), the last
/// three as exact "p/q" strings.
#[pyfunction]
fn count_tetra_even_report(d: u64, c: u64) -> PyResult<(BigInt, String, String, String)> {
    let r = hardy_sums::lattice::count_tetra_mordell2(d, c, &BruteForceBudget::default())
        .map_err(err)?;
    Ok((
        r.brute,
        r.closed_printed.to_string(),
        r.closed_corrected.to_string(),
        r.delta.to_string(),
    ))
}

/// Signed crossing number at the boundary point (num, den); den = 0 is ∞.
#[pyfunction]
fn intersection_number(num: BigInt, den: BigInt) -> PyResult<BigInt> {
    hardy_sums::net::intersection_number(&to_boundary(num, den)?).map_err(err)
}

/// The net edges crossed at num/den, as ((p_num, p_den), (q_num, q_den), phi).
#[pyfunction]
fn enumerate_crossings(num: BigInt, den: BigInt) -> PyResult<Vec<CrossingTuple>> {
    let x = match to_boundary(num, den)? {
        BoundaryPoint::Infinity => return Ok(Vec::new()),
        BoundaryPoint::Finite(x) => x,
    };
    let h = hardy_sums::net::vertical_geodesic(&x);
    let mut out = Vec::new();
    for edge in hardy_sums::net::enumerate_crossings(&x).map_err(err)? {
        let phi = hardy_sums::net::phi_intersect(&edge.as_geodesic(), &h).map_err(err)?;
        out.push((to_tuple(edge.lo()), to_tuple(edge.hi()), phi));
    }
    Ok(out)
}

/// Run a verification suite; returns True when every case holds.
#[pyfunction]
#[pyo3(signature = (suite, bound=None))]
fn verify(suite: &str, bound: Option<u64>) -> PyResult<bool> {
    let reports =
        hardy_sums::verify::run_suite(suite, bound, &BruteForceBudget::default()).map_err(err)?;
    Ok(reports.iter().all(|r| r.passed()))
}

#[pymodule]
fn hardy_sums_py(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUniModMatrix>()?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(sign, m)?)?;
    m.add_function(wrap_pyfunction!(sawtooth, m)?)?;
    m.add_function(wrap_pyfunction!(dedekind, m)?)?;
    m.add_function(wrap_pyfunction!(dedekind_fast, m)?)?;
    m.add_function(wrap_pyfunction!(rademacher_cocycle, m)?)?;
    m.add_function(wrap_pyfunction!(s4, m)?)?;
    m.add_function(wrap_pyfunction!(s4_via_dedekind, m)?)?;
    m.add_function(wrap_pyfunction!(hardy_s, m)?)?;
    m.add_function(wrap_pyfunction!(frak_s4, m)?)?;
    m.add_function(wrap_pyfunction!(compose_word, m)?)?;
    m.add_function(wrap_pyfunction!(count_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(count_triangle_even, m)?)?;
    m.add_function(wrap_pyfunction!(count_tetra, m)?)?;
    m.add_function(wrap_pyfunction!(count_tetra_even_report, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_number, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_crossings, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
