//! The oriented geodesic net over the odd/odd rationals, pairwise
//! intersection signs, and the signed count of net geodesics crossed by a
//! vertical geodesic.
//!
//! Net vertices are reduced fractions with odd numerator and odd denominator;
//! two are joined when the cross-determinant of their coordinate pairs is ±2.
//! Each geodesic is oriented from the lower-denominator endpoint to the
//! higher-denominator one; integer-to-integer geodesics (equal denominators,
//! necessarily 1) carry both orientations and contribute 0 to every signed
//! count.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BoundaryPoint, Rational};
use crate::modgroup::UniModMatrix;

/// Orientation tag of a geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Directed,
    DoublyOriented,
}

/// An ordered pair of distinct boundary points with an orientation tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGeodesic {
    pub start: BoundaryPoint,
    pub end: BoundaryPoint,
    pub orientation: Orientation,
}

impl OrientedGeodesic {
    pub fn directed(start: BoundaryPoint, end: BoundaryPoint) -> Result<Self> {
        if start == end {
            return Err(Error::domain("geodesic endpoints must be distinct"));
        }
        Ok(OrientedGeodesic {
            start,
            end,
            orientation: Orientation::Directed,
        })
    }

    pub fn doubly_oriented(a: BoundaryPoint, b: BoundaryPoint) -> Result<Self> {
        if a == b {
            return Err(Error::domain("geodesic endpoints must be distinct"));
        }
        Ok(OrientedGeodesic {
            start: a,
            end: b,
            orientation: Orientation::DoublyOriented,
        })
    }
}

/// The vertical geodesic from i∞ down to x.
pub fn vertical_geodesic(x: &Rational) -> OrientedGeodesic {
    OrientedGeodesic {
        start: BoundaryPoint::Infinity,
        end: BoundaryPoint::Finite(x.clone()),
        orientation: Orientation::Directed,
    }
}

/// Direction of a net edge relative to its sorted endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeDirection {
    LoToHi,
    HiToLo,
    Both,
}

/// A net geodesic: sorted endpoints plus the derived orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetEdge {
    lo: Rational,
    hi: Rational,
    direction: EdgeDirection,
}

fn is_odd_odd(x: &Rational) -> bool {
    x.numer().is_odd() && x.denom().is_odd()
}

/// Accept (p, q) as a net edge: both endpoints odd/odd reduced fractions with
/// cross-determinant ±2. Returns the canonically oriented edge, or None.
pub fn net_membership(p: &Rational, q: &Rational) -> Option<NetEdge> {
    if p == q || !is_odd_odd(p) || !is_odd_odd(q) {
        return None;
    }
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    let det = lo.numer() * hi.denom() - hi.numer() * lo.denom();
    if det.abs() != BigInt::from(2) {
        return None;
    }
    let direction = match lo.denom().cmp(hi.denom()) {
        std::cmp::Ordering::Less => EdgeDirection::LoToHi,
        std::cmp::Ordering::Greater => EdgeDirection::HiToLo,
        std::cmp::Ordering::Equal => EdgeDirection::Both, // forces denominators 1
    };
    Some(NetEdge {
        lo: lo.clone(),
        hi: hi.clone(),
        direction,
    })
}

impl NetEdge {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn direction(&self) -> EdgeDirection {
        self.direction
    }

    /// Product of the two denominators; the inverse of the edge's radius
    /// times 2, and the quantity the crossing bound caps.
    pub fn denominator_product(&self) -> BigInt {
        self.lo.denom() * self.hi.denom()
    }

    pub fn as_geodesic(&self) -> OrientedGeodesic {
        let (start, end, orientation) = match self.direction {
            EdgeDirection::LoToHi => (self.lo.clone(), self.hi.clone(), Orientation::Directed),
            EdgeDirection::HiToLo => (self.hi.clone(), self.lo.clone(), Orientation::Directed),
            EdgeDirection::Both => (
                self.lo.clone(),
                self.hi.clone(),
                Orientation::DoublyOriented,
            ),
        };
        OrientedGeodesic {
            start: BoundaryPoint::Finite(start),
            end: BoundaryPoint::Finite(end),
            orientation,
        }
    }
}

impl fmt::Display for NetEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.direction {
            EdgeDirection::LoToHi => "->",
            EdgeDirection::HiToLo => "<-",
            EdgeDirection::Both => "<->",
        };
        write!(f, "({} {arrow} {})", self.lo, self.hi)
    }
}

/// True when the four distinct points are in counterclockwise cyclic order
/// on the boundary circle (increasing reals, ∞ greatest).
fn ccw4(points: [&BoundaryPoint; 4]) -> bool {
    let min_idx = (0..4)
        .min_by(|&i, &j| points[i].circle_cmp(points[j]))
        .unwrap();
    (0..3).all(|k| {
        let a = points[(min_idx + k) % 4];
        let b = points[(min_idx + k + 1) % 4];
        a.circle_cmp(b) == std::cmp::Ordering::Less
    })
}

/// Signed intersection of the probe geodesic `h` with `g`: 0 when they do not
/// cross or `g` is doubly oriented, +1 when `g` crosses left-to-right across
/// `h`'s direction of travel, -1 for right-to-left. Concretely, +1 iff
/// (h.start, g.end, h.end, g.start) is in counterclockwise cyclic order.
pub fn phi_intersect(g: &OrientedGeodesic, h: &OrientedGeodesic) -> Result<i32> {
    for ge in [&g.start, &g.end] {
        for he in [&h.start, &h.end] {
            if ge == he {
                return Err(Error::domain(format!(
                    "geodesics share the endpoint {ge}; the crossing sign is undefined"
                )));
            }
        }
    }
    if h.orientation == Orientation::DoublyOriented {
        return Err(Error::domain(
            "probe geodesic must carry a single orientation",
        ));
    }
    if g.orientation == Orientation::DoublyOriented {
        return Ok(0); // the two opposing orientations cancel
    }
    if ccw4([&h.start, &g.end, &h.end, &g.start]) {
        Ok(1)
    } else if ccw4([&h.start, &g.start, &h.end, &g.end]) {
        Ok(-1)
    } else {
        Ok(0)
    }
}

fn check_theta_cusp(x: &Rational) -> Result<()> {
    if (x.numer() + x.denom()).is_even() {
        return Err(Error::domain(format!(
            "{x} is not a theta cusp: numerator + denominator must be odd"
        )));
    }
    Ok(())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// The matrix A ∈ Γ_θ with A·i∞ = x, lower-left entry positive, and
/// lower-right entry in (-γ, γ). Unique with those constraints.
pub fn theta_cusp_matrix(x: &Rational) -> Result<UniModMatrix> {
    check_theta_cusp(x)?;
    let alpha = x.numer().clone();
    let gamma = x.denom().clone(); // > 0 by normalization
    let delta = if gamma.is_even() {
        // alpha odd: solve alpha·delta ≡ 1 (mod 2γ); the window holds one rep
        let m = BigInt::from(2) * &gamma;
        let mut r = mod_inverse(&alpha.mod_floor(&m), &m);
        if r > gamma {
            r -= &m;
        }
        r
    } else {
        // gamma odd: delta must be even; pick the even representative mod γ
        let mut r = mod_inverse(&alpha.mod_floor(&gamma), &gamma);
        if r.is_odd() {
            r -= &gamma;
        }
        r
    };
    debug_assert!(delta.abs() < gamma || gamma.is_one() && delta.is_zero());
    let beta = (&alpha * &delta - BigInt::one()) / &gamma;
    let m = UniModMatrix::new(alpha, beta, gamma, delta)?;
    debug_assert!(m.in_gamma_theta());
    Ok(m)
}

fn finite(p: BoundaryPoint) -> Rational {
    match p {
        BoundaryPoint::Finite(x) => x,
        BoundaryPoint::Infinity => unreachable!("vertex of a cusp triangle is finite"),
    }
}

/// Upper bound on the denominator product of any net edge crossed by the
/// vertical geodesic at x: ceil(1/r_x), where r_x is the largest radius among
/// the sides of the ideal triangle at x (the image of the triangle with
/// vertices -1, 1, ∞ under [`theta_cusp_matrix`]).
pub fn crossing_bound(x: &Rational) -> Result<BigInt> {
    let m = theta_cusp_matrix(x)?;
    let v_inf = x.clone();
    let v_plus = finite(m.moebius(&BoundaryPoint::Finite(Rational::one())));
    let v_minus = finite(m.moebius(&BoundaryPoint::Finite(-Rational::one())));
    let diameters = [
        (&v_inf - &v_plus).abs(),
        (&v_inf - &v_minus).abs(),
        (&v_plus - &v_minus).abs(),
    ];
    let max_diameter = diameters.iter().max().cloned().unwrap();
    // 1/r_x = 2/max_diameter
    let inv = Rational::from_integer(BigInt::from(2)) / max_diameter;
    Ok(inv.ceil().to_integer())
}

/// Rough over-estimate of the loop steps [`enumerate_crossings_with_bound`]
/// takes for a given bound; lets callers refuse runaway scans up front.
pub fn scan_size_estimate(bound: &BigInt) -> BigInt {
    bound * BigInt::from(bound.bits())
}

/// All net edges straddling x, scanning odd coprime denominator pairs (c, d)
/// with c·d below `bound` and solving the cross-determinant congruence for
/// the left endpoint inside the window (x-2, x). Canonical order: by
/// denominator product, then by left endpoint.
pub fn enumerate_crossings_with_bound(x: &Rational, bound: &BigInt) -> Result<Vec<NetEdge>> {
    check_theta_cusp(x)?;
    let mut edges: Vec<NetEdge> = Vec::new();
    let two = BigInt::from(2);
    let mut c = BigInt::one();
    while c <= *bound {
        let mut d = BigInt::one();
        while &c * &d <= *bound {
            if c.gcd(&d).is_one() {
                // left numerators solve a·d ≡ -2 (mod c), inside (c(x-2), cx)
                let base = (-&two * mod_inverse(&d.mod_floor(&c), &c)).mod_floor(&c);
                let lo_excl =
                    Rational::from_integer(c.clone()) * (x - Rational::from_integer(two.clone()));
                let hi_excl = Rational::from_integer(c.clone()) * x;
                let t = ((lo_excl - Rational::from_integer(base.clone()))
                    / Rational::from_integer(c.clone()))
                .floor()
                .to_integer();
                let mut a: BigInt = &base + &c * (t + 1);
                while Rational::from_integer(a.clone()) < hi_excl {
                    if a.is_odd() {
                        let num = &a * &d + &two;
                        if num.mod_floor(&c).is_zero() {
                            let b = num / &c;
                            if b.is_odd() {
                                let q = Rational::new(b, d.clone());
                                if q > *x {
                                    let p = Rational::new(a.clone(), c.clone());
                                    let edge =
                                        net_membership(&p, &q).expect("solved pair is a net edge");
                                    edges.push(edge);
                                }
                            }
                        }
                    }
                    a += &c;
                }
            }
            d += &two;
        }
        c += &two;
    }
    edges.sort_by(|e1, e2| {
        (e1.denominator_product(), e1.lo.clone()).cmp(&(e2.denominator_product(), e2.lo.clone()))
    });
    edges.dedup();
    Ok(edges)
}

/// All net edges crossed by the vertical geodesic at x ∈ Q_θ.
pub fn enumerate_crossings(x: &Rational) -> Result<Vec<NetEdge>> {
    let bound = crossing_bound(x)?;
    enumerate_crossings_with_bound(x, &bound)
}

/// Signed intersection count of the vertical geodesic at x with the net;
/// 0 at ∞. Rejects boundary points outside the Γ_θ-orbit of ∞.
pub fn intersection_number(x: &BoundaryPoint) -> Result<BigInt> {
    let x = match x {
        BoundaryPoint::Infinity => return Ok(BigInt::zero()),
        BoundaryPoint::Finite(x) => x,
    };
    let h = vertical_geodesic(x);
    let mut total = BigInt::zero();
    for edge in enumerate_crossings(x)? {
        total += phi_intersect(&edge.as_geodesic(), &h)?;
    }
    Ok(total)
}

/// The three boundary maps the net is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryMap {
    /// x ↦ -x (reflection across the imaginary axis).
    Reflect,
    /// x ↦ x + 2.
    TranslateBy2,
    /// x ↦ 1/x (inversion in the unit circle).
    Invert,
}

/// Image of a net edge under a symmetry map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryOutcome {
    /// The induced orientation agrees with the net's own orientation.
    InNet(NetEdge),
    /// The image is a net geodesic but its induced orientation conflicts
    /// with the canonical one (the inversion's exceptional cases).
    Exceptional {
        endpoints: (Rational, Rational),
        induced: EdgeDirection,
        canonical: EdgeDirection,
    },
}

fn apply_map(map: SymmetryMap, x: &Rational) -> Result<Rational> {
    Ok(match map {
        SymmetryMap::Reflect => -x.clone(),
        SymmetryMap::TranslateBy2 => x + Rational::from_integer(BigInt::from(2)),
        SymmetryMap::Invert => {
            if x.is_zero() {
                return Err(Error::domain("cannot invert the endpoint 0"));
            }
            x.recip()
        }
    })
}

/// Apply a symmetry map to a net edge and compare the induced orientation of
/// the image with the net's canonical orientation.
pub fn net_symmetry_check(edge: &NetEdge, map: SymmetryMap) -> Result<SymmetryOutcome> {
    let (start, end) = match edge.direction {
        EdgeDirection::LoToHi => (&edge.lo, &edge.hi),
        EdgeDirection::HiToLo | EdgeDirection::Both => (&edge.hi, &edge.lo),
    };
    let image_start = apply_map(map, start)?;
    let image_end = apply_map(map, end)?;
    let image = net_membership(&image_start, &image_end)
        .expect("symmetry maps preserve the unoriented net");
    let induced = if edge.direction == EdgeDirection::Both {
        EdgeDirection::Both
    } else if image_start < image_end {
        EdgeDirection::LoToHi
    } else {
        EdgeDirection::HiToLo
    };
    if induced == image.direction {
        Ok(SymmetryOutcome::InNet(image))
    } else {
        Ok(SymmetryOutcome::Exceptional {
            endpoints: (image.lo.clone(), image.hi.clone()),
            induced,
            canonical: image.direction,
        })
    }
}
