//! Arithmetic in GF(p^m), polynomials over it, and unit groups of residue rings.

use insdel::galois::{unit_group_size, Field, Poly, ResidueRing};

fn main() -> insdel::Result<()> {
    let f = Field::of_order(9)?;
    println!("GF(9) modulus (low to high) {:?}", f.modulus());
    let x = f.elem(4)?;
    let y = f.elem(7)?;
    println!(
        "4 * 7 = {}, 4^-1 = {}, 4^8 = {}",
        f.mul(x, y).code(),
        f.inv(x)?.code(),
        f.pow(x, 8).code()
    );

    let p = Poly::from_codes(&f, &[1, 0, 1])?;
    println!("x^2 + 1 irreducible over GF(9): {}", p.is_irreducible());
    let g = Poly::from_codes(&Field::prime(3)?, &[1, 0, 1])?;
    println!("x^2 + 1 irreducible over GF(3): {}", g.is_irreducible());

    let f5 = Field::prime(5)?;
    let ring = ResidueRing::root_power(&f5, f5.zero(), 3)?;
    println!(
        "units of GF(5)[x]/(x^2): {} (formula {})",
        ring.units().len(),
        unit_group_size(5, 3)?
    );
    let u = ring.reduce(&Poly::from_codes(&f5, &[2, 3])?)?;
    println!(
        "(2 + 3x)^4 = {:?}",
        ring.pow(&u, 4)
            .coeffs()
            .iter()
            .map(|c| c.code())
            .collect::<Vec<_>>()
    );
    Ok(())
}
