//! CSV and plain-text report writers. Output is byte-stable for fixed input.

use std::fmt::Write as _;

use crate::asr::{AsrSet, PowerKind, Relation};
use crate::decomposition::RadicalIdeal;

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row of a scan table.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub s: u32,
    pub kind: PowerKind,
    pub members: usize,
    pub depth: Option<usize>,
    /// Relation of the previous row's set to this one.
    pub comparison: Option<Relation>,
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("s,kind,member-count,depth,comparison-to-previous\n");
    for r in rows {
        let depth = r.depth.map_or_else(|| "-".to_string(), |d| d.to_string());
        let cmp = r.comparison.map_or_else(|| "-".to_string(), |c| c.to_string());
        writeln!(out, "{},{},{},{},{}", r.s, r.kind, r.members, depth, cmp).expect("writing to a String");
    }
    out
}

/// Every member of every set, one per line: `s<TAB>radical<TAB>witness`.
pub fn radicals_sidecar(sets: &[(u32, &AsrSet)]) -> String {
    let mut out = String::new();
    for (s, set) in sets {
        for w in set.witnesses() {
            writeln!(out, "{s}\t{}\t{}", w.radical, w.exponent).expect("writing to a String");
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct DepthRow {
    pub s: u32,
    pub kind: PowerKind,
    pub depth: usize,
    pub argmin: RadicalIdeal,
}

pub fn depth_csv(rows: &[DepthRow]) -> String {
    let mut out = String::from("s,kind,depth,argmin\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.s, r.kind, r.depth, quote(&r.argmin.to_string())).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_radical;

    #[test]
    fn depth_csv_quotes_radicals() {
        let rows = [DepthRow {
            s: 1,
            kind: PowerKind::Symbolic,
            depth: 1,
            argmin: parse_radical("(x1,x2)∩(x2,x3)", None).unwrap(),
        }];
        assert_eq!(depth_csv(&rows), "s,kind,depth,argmin\n1,symbolic,1,\"(x1,x2)∩(x2,x3)\"\n");
    }

    #[test]
    fn scan_csv_dashes_missing_fields() {
        let rows = [
            ScanRow { s: 1, kind: PowerKind::Ordinary, members: 3, depth: Some(1), comparison: None },
            ScanRow { s: 2, kind: PowerKind::Ordinary, members: 4, depth: None, comparison: Some(Relation::Subset) },
        ];
        assert_eq!(
            scan_csv(&rows),
            "s,kind,member-count,depth,comparison-to-previous\n1,ordinary,3,1,-\n2,ordinary,4,-,subset\n"
        );
    }
}
