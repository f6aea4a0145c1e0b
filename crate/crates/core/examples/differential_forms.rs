//! Wedge, exterior derivative, interior product, Lie derivative, pullback.

use polarforms::forms::PolyVectorField;
use polarforms::parse::{parse_form, parse_poly};
use polarforms::MatrixQ;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_form("x2 dx1", 3)?;
    let b = parse_form("x1*x3 dx2 + dx3", 3)?;
    let ab = a.wedge(&b)?;
    println!("a ∧ b = {ab}");
    println!("d(a ∧ b) = {}", ab.exterior_d());
    println!("d d(a ∧ b) = {}", ab.exterior_d().exterior_d());

    // rotation field about the x3 axis
    let rot = PolyVectorField::linear(&MatrixQ::from_i64(3, 3, &[0, -1, 0, 1, 0, 0, 0, 0, 0]))?;
    let vol = parse_form("dx1^dx2^dx3", 3)?;
    println!("i_ζ vol = {}", vol.interior(&rot)?);
    println!("L_ζ vol = {}", vol.lie_derivative(&rot)?);
    println!("L_ζ a = {}", a.lie_derivative(&rot)?);

    // polar coordinates-like polynomial map
    let phi = [parse_poly("x1^2 - x2^2", 2)?, parse_poly("2*x1*x2", 2)?];
    let area = parse_form("dx1^dx2", 2)?;
    println!("pullback of dx1∧dx2 under z ↦ z² = {}", area.pullback(&phi)?);
    Ok(())
}
