//! The Koszul factorization squares to `u·p` on a truncated basis.

use mf_ainfinity::exterior::Form;
use mf_ainfinity::koszul::{check_factorization, delta_f, FKey, FVector};
use mf_ainfinity::poly::PolyMonomial;
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let ctx = Context::parse("x1*x2*x3", 3)?;
    let v = FVector::basis(FKey::new(Form::from_indices(&[1, 2], 3)?, PolyMonomial::new(&[0, 0, 1], 0)));
    println!("v           = {}", v);
    println!("delta_F v   = {}", delta_f(&ctx, &v));
    println!("delta_F^2 v = {}", delta_f(&ctx, &delta_f(&ctx, &v)));

    let r = check_factorization(&ctx, 6);
    println!("delta_F^2 = u*p on {} basis elements: {}", r.checked_basis_count, r.status);
    Ok(())
}
