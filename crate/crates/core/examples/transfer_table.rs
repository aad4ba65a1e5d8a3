//! Compute a product table and write it as canonical JSON.

use mf_ainfinity::trees::{Engine, MuTable, TransferOptions};
use mf_ainfinity::Context;

fn main() -> mf_ainfinity::Result<()> {
    let ctx = Context::parse("x1^3 + x2^3", 2)?;
    let engine = Engine::new(&ctx, TransferOptions::default());
    let table = MuTable::compute(&engine, 3, 1);
    print!("{}", table.to_text());

    let json = table.to_json();
    let back = MuTable::from_json(&json)?;
    assert_eq!(back, table);
    println!("{} entries, {} bytes of JSON", table.entries.len(), json.len());
    Ok(())
}
