use std::fmt::Write;

use super::RectComplex;
use crate::scalar::format_rational;
use crate::{Axis, Error, Rational, Scalar};

/// Piecewise-constant function on `[x_0, x_n]`: one value on each open
/// piece `(x_i, x_{i+1})` and one at each breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction<T> {
    breakpoints: Vec<T>,
    values: Vec<T>,
    point_values: Vec<T>,
}

impl<T: Scalar> StepFunction<T> {
    pub fn new(breakpoints: Vec<T>, values: Vec<T>, point_values: Vec<T>) -> Option<Self> {
        let increasing = breakpoints.windows(2).all(|w| w[0] < w[1]);
        let shaped = !breakpoints.is_empty()
            && values.len() + 1 == breakpoints.len()
            && point_values.len() == breakpoints.len();
        (increasing && shaped).then_some(StepFunction { breakpoints, values, point_values })
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn point_values(&self) -> &[T] {
        &self.point_values
    }

    pub fn eval(&self, x: &T) -> Option<T> {
        let (first, last) = (self.breakpoints.first()?, self.breakpoints.last()?);
        if x < first || x > last {
            return None;
        }
        if let Some(i) = self.breakpoints.iter().position(|b| b == x) {
            return Some(self.point_values[i].clone());
        }
        let i = self.breakpoints.iter().rposition(|b| b < x)?;
        Some(self.values[i].clone())
    }

    pub fn negate(&self) -> Self {
        StepFunction {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| -v.clone()).collect(),
            point_values: self.point_values.iter().map(|v| -v.clone()).collect(),
        }
    }

    /// Values in left-to-right order: breakpoint, piece, breakpoint, ...
    pub fn sequence(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.values.len() * 2 + 1);
        for (i, p) in self.point_values.iter().enumerate() {
            out.push(p.clone());
            if let Some(v) = self.values.get(i) {
                out.push(v.clone());
            }
        }
        out
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(&self.sequence())
    }
}

impl StepFunction<Rational> {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("breakpoint,value,point_value\n");
        for (i, b) in self.breakpoints.iter().enumerate() {
            let piece = self.values.get(i).map(format_rational).unwrap_or_default();
            writeln!(out, "{},{},{}", format_rational(b), piece, format_rational(&self.point_values[i]))
                .expect("writing to a String");
        }
        out
    }
}

/// Non-decreasing then non-increasing; monotone and constant sequences count.
pub fn is_unimodal<T: PartialOrd>(values: &[T]) -> bool {
    let mut descending = false;
    for w in values.windows(2) {
        if w[1] < w[0] {
            descending = true;
        } else if w[1] > w[0] && descending {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profiles<T> {
    pub f_plus: StepFunction<T>,
    pub f_minus: StepFunction<T>,
    pub normal: bool,
    pub vertically_convex: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnimodalCheck {
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
}

impl<T: Scalar> RectComplex<T> {
    /// Upper and lower boundary profiles over the x-extent. Degenerate
    /// rectangles take part, so segment tips can make a complex normal.
    pub fn associated_profiles(&self) -> Result<Profiles<T>, Error> {
        if !self.is_connected() {
            return Err(Error::ComplexDisconnected);
        }
        let xs = self.coords(Axis::Horizontal);
        let extremes = |covers: &dyn Fn(&super::Rect<T>) -> bool| {
            let mut top: Option<T> = None;
            let mut bottom: Option<T> = None;
            for r in self.rects.iter().filter(|r| covers(r)) {
                if top.as_ref().is_none_or(|t| r.ymax > *t) {
                    top = Some(r.ymax.clone());
                }
                if bottom.as_ref().is_none_or(|b| r.ymin < *b) {
                    bottom = Some(r.ymin.clone());
                }
            }
            (top.expect("connected complex covers its x-extent"), bottom.expect("covered"))
        };
        let (mut plus_pts, mut minus_pts) = (vec![], vec![]);
        for x in &xs {
            let (t, b) = extremes(&|r| r.xmin <= *x && *x <= r.xmax);
            plus_pts.push(t);
            minus_pts.push(b);
        }
        let (mut plus, mut minus) = (vec![], vec![]);
        for w in xs.windows(2) {
            let (t, b) = extremes(&|r| r.xmin <= w[0] && w[1] <= r.xmax);
            plus.push(t);
            minus.push(b);
        }
        let last = xs.len() - 1;
        let normal = plus_pts[0] == minus_pts[0] && plus_pts[last] == minus_pts[last];
        Ok(Profiles {
            f_plus: StepFunction::new(xs.clone(), plus, plus_pts).expect("well-formed"),
            f_minus: StepFunction::new(xs, minus, minus_pts).expect("well-formed"),
            normal,
            vertically_convex: self.is_vertically_convex(),
        })
    }

    /// Compares the exact staircase decision with unimodality of `f+` and
    /// `-f-` on a normal, vertically convex complex.
    pub fn thm_unimodal_check(&self) -> Result<UnimodalCheck, Error> {
        let profiles = self.associated_profiles()?;
        if !profiles.normal {
            return Err(Error::Hypothesis("not normal: f+ and f- differ at an end of the x-extent".into()));
        }
        if !profiles.vertically_convex {
            return Err(Error::Hypothesis("not vertically convex".into()));
        }
        let lhs = self.is_staircase_connected_exact()?.passed();
        let rhs = profiles.f_plus.is_unimodal() && profiles.f_minus.negate().is_unimodal();
        Ok(UnimodalCheck { lhs, rhs, agree: lhs == rhs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::Rect;
    use crate::ratio;

    fn complex(rects: &[(i64, i64, i64, i64)]) -> RectComplex<Rational> {
        RectComplex::new(rects.iter().map(|&(a, b, c, d)| Rect::from_i64(a, b, c, d).unwrap()).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&[1, 3, 5, 4, 2]));
        assert!(!is_unimodal(&[1, 3, 2, 3]));
        assert!(is_unimodal(&[5, 5, 5]));
        assert!(is_unimodal(&[1, 2, 3]));
        assert!(is_unimodal(&[3, 2, 1]));
        assert!(is_unimodal::<i64>(&[]));
    }

    #[test]
    fn single_rectangle_profiles() {
        let p = complex(&[(0, 0, 2, 1)]).associated_profiles().unwrap();
        assert_eq!(p.f_plus.values(), ints(&[1]).as_slice());
        assert_eq!(p.f_plus.point_values(), ints(&[1, 1]).as_slice());
        assert_eq!(p.f_minus.sequence(), ints(&[0, 0, 0]));
        assert!(!p.normal);
        assert!(p.vertically_convex);
    }

    #[test]
    fn pyramid_profiles() {
        let p = complex(&[(0, 0, 6, 1), (1, 1, 5, 2), (2, 2, 4, 3)]).associated_profiles().unwrap();
        assert_eq!(p.f_plus.breakpoints(), ints(&[0, 1, 2, 4, 5, 6]).as_slice());
        assert_eq!(p.f_plus.values(), ints(&[1, 2, 3, 2, 1]).as_slice());
        assert!(p.f_plus.is_unimodal());
        assert!(p.f_minus.sequence().iter().all(|v| *v == ratio(0, 1)));
        assert!(!p.normal);
    }

    #[test]
    fn tipped_tent_is_normal() {
        let tent = complex(&[(0, 1, 1, 1), (1, 0, 2, 2), (2, 0, 3, 3), (3, 1, 4, 2), (4, 1, 5, 1)]);
        let p = tent.associated_profiles().unwrap();
        assert!(p.normal && p.vertically_convex);
        assert_eq!(p.f_plus.eval(&ratio(5, 2)), Some(ratio(3, 1)));
        assert_eq!(p.f_plus.eval(&ratio(1, 1)), Some(ratio(2, 1)));
        assert_eq!(p.f_plus.eval(&ratio(6, 1)), None);
        let check = tent.thm_unimodal_check().unwrap();
        assert_eq!(check, UnimodalCheck { lhs: true, rhs: true, agree: true });
    }

    #[test]
    fn dip_breaks_both_sides() {
        let dip = complex(&[(0, 2, 1, 2), (1, 0, 2, 3), (2, 0, 3, 1), (3, 0, 4, 3), (4, 2, 5, 2)]);
        let check = dip.thm_unimodal_check().unwrap();
        assert_eq!(check, UnimodalCheck { lhs: false, rhs: false, agree: true });
    }

    #[test]
    fn hypothesis_violations_named() {
        let rect = complex(&[(0, 0, 2, 1)]);
        assert!(matches!(rect.thm_unimodal_check(), Err(Error::Hypothesis(m)) if m.contains("normal")));
        let notch = complex(&[(0, 1, 1, 1), (1, 0, 2, 1), (1, 2, 2, 3), (1, 1, 1, 2), (2, 1, 3, 1)]);
        assert!(matches!(notch.thm_unimodal_check(), Err(Error::Hypothesis(m)) if m.contains("vertically")));
    }

    #[test]
    fn csv_layout() {
        let f = complex(&[(0, 0, 2, 1)]).associated_profiles().unwrap().f_plus;
        assert_eq!(f.to_csv(), "breakpoint,value,point_value\n0,1,1\n2,,1\n");
    }

    #[test]
    fn step_function_validation() {
        assert!(StepFunction::new(ints(&[0, 1]), ints(&[2]), ints(&[2, 2])).is_some());
        assert!(StepFunction::new(ints(&[1, 0]), ints(&[2]), ints(&[2, 2])).is_none());
        assert!(StepFunction::new(ints(&[0, 1]), ints(&[]), ints(&[2, 2])).is_none());
    }
}
