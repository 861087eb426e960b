//! CSV output for the bicyclic comparison table.

use std::io;

use hyperspectral_core::enumerate::ConjectureRow;

pub const HEADER: [&str; 8] = [
    "m",
    "rho_BL1_lo",
    "rho_BL1_hi",
    "rho_BL2_lo",
    "rho_BL2_hi",
    "rho_BP_lo",
    "rho_BP_hi",
    "ordering",
];

/// Bracket endpoints are printed in shortest round-trip form; the `BP`
/// columns are empty when the row has no `BP` entry.
pub fn write_conjecture_csv<W: io::Write>(rows: &[ConjectureRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        let (bp_lo, bp_hi) = match row.bp {
            Some(b) => (b.lower.to_string(), b.upper.to_string()),
            None => (String::new(), String::new()),
        };
        w.write_record([
            row.m.to_string(),
            row.bl1.lower.to_string(),
            row.bl1.upper.to_string(),
            row.bl2.lower.to_string(),
            row.bl2.upper.to_string(),
            bp_lo,
            bp_hi,
            row.ordering.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
