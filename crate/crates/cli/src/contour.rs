//! Sign grids of bivariate polynomials for plotting zero sets.

use std::fmt::Write;

use algvor::exactmath::field::rational_to_f64;
use algvor::exactmath::{parse_polynomial, parse_rational, MonomialOrder, PolyRing, Polynomial, Rationals};
use algvor::{Error, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Values below this fraction of the largest magnitude in their row count as zero.
pub const ROW_ZERO_FRACTION: f64 = 1e-12;

/// `[a_min, a_max] x [b_min, b_max]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Window {
    pub a: (BigRational, BigRational),
    pub b: (BigRational, BigRational),
}

impl Window {
    /// Parses `a_min,a_max,b_min,b_max`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        let [a0, a1, b0, b1]: [BigRational; 4] =
            parts.try_into().map_err(|_| Error::InvalidInput("window needs four numbers".into()))?;
        if a0 >= a1 || b0 >= b1 {
            return Err(Error::InvalidInput("window bounds must be increasing".into()));
        }
        Ok(Window { a: (a0, a1), b: (b0, b1) })
    }
}

pub fn parse_bivariate(text: &str, vars: &[String]) -> Result<Polynomial<Rationals>> {
    if vars.len() != 2 {
        return Err(Error::InvalidInput(format!("contour needs exactly two variables, got {}", vars.len())));
    }
    let ring = PolyRing::new(Rationals, vars, MonomialOrder::GrevLex)?;
    parse_polynomial(text, &ring)
}

fn grid(lo: &BigRational, hi: &BigRational, steps: usize) -> Vec<BigRational> {
    if steps == 1 {
        return vec![lo.clone()];
    }
    let den = BigRational::from_integer((steps as i64 - 1).into());
    (0..steps).map(|i| lo + (hi - lo) * BigRational::from_integer((i as i64).into()) / &den).collect()
}

/// Sign of `f` on a `resolution x resolution` grid, rows indexed by the
/// second coordinate. Values are evaluated exactly.
pub fn sign_grid(f: &Polynomial<Rationals>, window: &Window, resolution: usize) -> Result<Vec<(BigRational, BigRational, i8)>> {
    if resolution == 0 {
        return Err(Error::InvalidInput("resolution must be positive".into()));
    }
    let xs = grid(&window.a.0, &window.a.1, resolution);
    let ys = grid(&window.b.0, &window.b.1, resolution);
    let mut out = Vec::with_capacity(resolution * resolution);
    for b in &ys {
        let values = xs.iter().map(|a| f.eval(&[a.clone(), b.clone()])).collect::<Result<Vec<_>>>()?;
        let scale = values.iter().map(|v| rational_to_f64(v).abs()).fold(0.0, f64::max);
        for (a, v) in xs.iter().zip(values) {
            let sign = if v.is_zero() || rational_to_f64(&v).abs() < ROW_ZERO_FRACTION * scale {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            out.push((a.clone(), b.clone(), sign));
        }
    }
    Ok(out)
}

pub fn render_csv(cells: &[(BigRational, BigRational, i8)]) -> String {
    let mut s = String::from("u_a,u_b,sign\n");
    for (a, b, sign) in cells {
        let _ = writeln!(s, "{},{},{}", rational_to_f64(a), rational_to_f64(b), sign);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["u1".into(), "u2".into()]
    }

    #[test]
    fn constant_is_positive_everywhere() {
        let f = parse_bivariate("1", &vars()).unwrap();
        let w = Window::parse("-1,1,-1,1").unwrap();
        assert!(sign_grid(&f, &w, 7).unwrap().iter().all(|c| c.2 == 1));
    }

    #[test]
    fn circle_changes_sign_across_its_radius() {
        let f = parse_bivariate("u1^2 + u2^2 + u1", &vars()).unwrap();
        let w = Window::parse("-2,1,-1,1").unwrap();
        let cells = sign_grid(&f, &w, 31).unwrap();
        for (a, b, s) in cells {
            let (a, b) = (rational_to_f64(&a), rational_to_f64(&b));
            let r = ((a + 0.5).powi(2) + b * b).sqrt();
            if r < 0.45 {
                assert_eq!(s, -1);
            } else if r > 0.55 {
                assert_eq!(s, 1);
            }
        }
    }

    #[test]
    fn exact_zeros_are_reported() {
        let f = parse_bivariate("u1 - u2", &vars()).unwrap();
        let w = Window::parse("0,1,0,1").unwrap();
        let cells = sign_grid(&f, &w, 5).unwrap();
        assert_eq!(cells.iter().filter(|c| c.2 == 0).count(), 5);
        assert!(render_csv(&cells).starts_with("u_a,u_b,sign\n0,0,0\n0.25,0,1\n"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_bivariate("u1", &["u1".to_string()]).is_err());
        assert!(parse_bivariate("u3", &vars()).is_err());
        assert!(Window::parse("1,0,0,1").is_err());
        assert!(Window::parse("0,1,0").is_err());
    }
}
