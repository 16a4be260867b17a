//! The number-theoretic building blocks on their own.

use num_bigint::BigUint;
use qr_index::numeric::{
    crt_combine, ext_gcd, hensel_lift_sqrt, is_prime, mod_inverse, mr_decode, mr_encode,
    sqrt_mod_2k, sqrt_mod_prime, RadixSchedule,
};

fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (g, s, t) = ext_gcd(&n(240), &n(46))?;
    println!("gcd(240, 46) = {g} = 240*({s}) + 46*({t})");
    println!("3^-1 mod 7 = {}", mod_inverse(&n(3), &n(7))?);
    println!(
        "x = 2 mod 3, 3 mod 5, 2 mod 7 -> {}",
        crt_combine(&[(n(2), n(3)), (n(3), n(5)), (n(2), n(7))])?
    );
    println!("is_prime(2^61 - 1) = {}", is_prime(&n((1 << 61) - 1)));

    let p = n(1_000_000_009);
    let root = sqrt_mod_prime(&n(2), &p)?;
    println!("sqrt(2) mod {p} = {root}");
    let lifted = hensel_lift_sqrt(&root, &n(2), &p, 3)?;
    println!("lifted to mod p^3: {lifted}");
    println!("sqrt(17) mod 2^5 = {}", sqrt_mod_2k(&n(17), 5)?);

    let schedule = RadixSchedule::new(vec![n(1), n(3), n(2), n(1)])?;
    let digits = mr_decode(&n(4), &schedule)?;
    println!("4 in radices (1, 3, 2, 1) -> {digits:?}");
    println!("and back: {}", mr_encode(&digits, &schedule)?);
    Ok(())
}
