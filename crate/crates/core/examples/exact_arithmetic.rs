//! Rationals, sparse polynomials, parsing and exact division.

use polarforms::parse::parse_poly;
use polarforms::{MultiPoly, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let half = Rational::new(1, 2);
    let third: Rational = "-1/3".parse()?;
    println!("{half} + {third} = {}", &half + &third);

    let f = parse_poly("x1^2 - x2^2", 2)?;
    let g = parse_poly("x1 + x2", 2)?;
    let q = f.div_exact(&g)?;
    println!("({f}) / ({g}) = {q}");
    assert_eq!(&q * &g, f);

    // not divisible
    let h = parse_poly("x1^2 + x2^2", 2)?;
    println!("({h}) / ({g}): {}", h.div_exact(&g).unwrap_err());

    let sub = f.substitute(&[parse_poly("x1 + 1", 2)?, MultiPoly::var(2, 1)])?;
    println!("f(x1 + 1, x2) = {sub}");
    println!("df/dx1 = {}", f.partial(0));
    println!("f(3, 1/2) = {}", f.eval(&[3.into(), half.clone()]));
    Ok(())
}
