//! The standard split fourfold `x1 x2 x3 = y1 y2 y3` in projective 5-space:
//! its nine 3-planes, the nine singular lines, and the six distinguished
//! points where singular lines meet.

use num_rational::BigRational;

use crate::exact::field::{rat_int, Rationals};
use crate::exact::fmat::Mat;
use crate::exact::mpoly::MPoly;
use crate::geometry::hypersurface::{Hypersurface, LinearSubspace};
use crate::wreath::gamma::COORD_NAMES;

pub struct StandardFourfold {
    pub hypersurface: Hypersurface<Rationals>,
    /// `planes[3i + j]` is the 3-plane cut by `x_{i+1} = y_{j+1} = 0`.
    pub planes: Vec<LinearSubspace<Rationals>>,
    /// `lines[3p + q]` is the singular line with only `x_{p+1}, y_{q+1}` free.
    pub lines: Vec<LinearSubspace<Rationals>>,
    /// The six coordinate points.
    pub distinguished_points: Vec<Vec<BigRational>>,
}

/// The defining cubic, in the six coordinates `x1,x2,x3,y1,y2,y3`.
pub fn fourfold_equation() -> MPoly<Rationals> {
    MPoly::parse("x1*x2*x3 - y1*y2*y3", &COORD_NAMES).expect("fixed source")
}

fn unit_form(k: usize) -> Vec<BigRational> {
    let mut v = vec![rat_int(0); 6];
    v[k] = rat_int(1);
    v
}

pub fn standard_fourfold() -> StandardFourfold {
    let hypersurface = Hypersurface::new(fourfold_equation());

    let mut planes = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            planes.push(
                LinearSubspace::from_forms(Rationals, vec![unit_form(i), unit_form(3 + j)], 6)
                    .expect("coordinate plane"),
            );
        }
    }

    let mut lines = Vec::with_capacity(9);
    for p in 0..3 {
        for q in 0..3 {
            let forms: Vec<Vec<BigRational>> = (0..3)
                .filter(|&i| i != p)
                .map(unit_form)
                .chain((0..3).filter(|&j| j != q).map(|j| unit_form(3 + j)))
                .collect();
            lines.push(LinearSubspace::from_forms(Rationals, forms, 6).expect("coordinate line"));
        }
    }

    let distinguished_points = (0..6)
        .map(|k| {
            let mut v = vec![rat_int(0); 6];
            v[k] = rat_int(1);
            v
        })
        .collect();

    StandardFourfold {
        hypersurface,
        planes,
        lines,
        distinguished_points,
    }
}

impl StandardFourfold {
    /// Points where at least two singular lines meet, as normalized
    /// representatives, computed combinatorially from pairwise meets.
    pub fn line_meeting_points(&self) -> Vec<Vec<BigRational>> {
        let mut out: Vec<Vec<BigRational>> = Vec::new();
        for a in 0..9 {
            for b in a + 1..9 {
                let Some(meet) = self.lines[a].intersect(&self.lines[b]) else {
                    continue;
                };
                assert_eq!(meet.dim(), 0, "singular lines meet in points only");
                let pt = meet.spanning_points().row(0).to_vec();
                if !out.iter().any(|q| projectively_equal(q, &pt)) {
                    out.push(pt);
                }
            }
        }
        out.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        out
    }
}

pub fn projectively_equal(a: &[BigRational], b: &[BigRational]) -> bool {
    let amat = Mat::from_rows(Rationals, vec![a.to_vec(), b.to_vec()]);
    amat.rank() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn planes_lie_on_the_fourfold() {
        let p = standard_fourfold();
        for plane in &p.planes {
            assert_eq!(plane.dim(), 3);
            assert!(p.hypersurface.contains_subspace(plane));
        }
    }

    #[test]
    fn jacobian_ideal_is_the_six_products() {
        let f = fourfold_equation();
        let expected = [
            "x2*x3", "x1*x3", "x1*x2", "-y2*y3", "-y1*y3", "-y1*y2",
        ];
        for (k, text) in expected.iter().enumerate() {
            assert_eq!(f.partial(k), MPoly::parse(text, &COORD_NAMES).unwrap());
        }
    }

    #[test]
    fn singular_lines_kill_every_partial() {
        let p = standard_fourfold();
        for line in &p.lines {
            assert_eq!(line.dim(), 1);
            for partial in p.hypersurface.partials() {
                let h = Hypersurface::new(partial.clone());
                assert!(h.contains_subspace(line), "partial nonzero on a singular line");
            }
        }
    }

    #[test]
    fn distinguished_points_are_exactly_the_line_meets() {
        let p = standard_fourfold();
        let meets = p.line_meeting_points();
        assert_eq!(meets.len(), 6);
        for w in &p.distinguished_points {
            assert!(meets.iter().any(|m| projectively_equal(m, w)));
        }
        // each coordinate point of the x-block lies on the three lines of
        // its row
        for (idx, line) in p.lines.iter().enumerate() {
            let pidx = idx / 3;
            assert!(line.contains_point(&p.distinguished_points[pidx]));
            assert!(line.contains_point(&p.distinguished_points[3 + idx % 3]));
        }
        for m in &meets {
            assert_eq!(m.iter().filter(|c| !c.is_zero()).count(), 1);
        }
    }
}
