//! The A∞ relations on a full product table, under both sign forms.

use mf_ainfinity::conventions::{StasheffSign, STASHEFF};
use mf_ainfinity::trees::{Engine, MuTable, TransferOptions};
use mf_ainfinity::verify::stasheff_check;
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let ctx = Context::parse("x1^3 + x2^3", 2)?;
    let table = MuTable::compute(&Engine::new(&ctx, TransferOptions::default()), 5, 2);
    for r in stasheff_check(&table, 5, STASHEFF)? {
        println!("{:<28} {} ({} tuples)", r.check_name, r.status, r.checked);
    }
    for r in stasheff_check(&table, 5, StasheffSign::RPlusST)? {
        println!("{:<28} {} ({} tuples)", r.check_name, r.status, r.checked);
    }
    for r in stasheff_check(&table.twisted(), 5, StasheffSign::RPlusST)? {
        println!("{:<28} {} on the twisted table", r.check_name, r.status);
    }
    Ok(())
}
