#![allow(dead_code)]

use symcoh::fingroup::{make_group, FinGroup};
use symcoh::gmodule::{parse_module, GModule};

pub const GROUPS: [&str; 8] = ["C1", "C2", "C3", "C4", "C5", "C2xC2", "S3", "D4"];
pub const TRIVIAL: [&str; 5] = ["trivial:Z", "trivial:Z/2", "trivial:Z/3", "trivial:Z/4", "trivial:Z/5"];

pub fn group(spec: &str) -> FinGroup {
    make_group(spec).unwrap()
}

pub fn module(g: &FinGroup, spec: &str) -> GModule {
    parse_module(g, spec).unwrap()
}

/// Every battery pair with its degree bound.
pub fn battery() -> Vec<(FinGroup, GModule, usize)> {
    let mut out = Vec::new();
    for g in GROUPS {
        let grp = group(g);
        let top = if grp.order() <= 4 { 4 } else { 3 };
        for m in TRIVIAL {
            out.push((grp.clone(), module(&grp, m), top));
        }
    }
    let c2 = group("C2");
    out.push((c2.clone(), module(&c2, "sign:Z"), 4));
    out
}
