//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use symcoh::cli::extension_classes;
use symcoh::cochain::CochainSpace;
use symcoh::cohomology::{cohomology, comparison_map, symmetric_cohomology};
use symcoh::fingroup::{make_group, FinGroup};
use symcoh::gmodule::{parse_module, GModule};
use symcoh::homogeneous::verify_remark;
use symcoh::symop::{injectivity_predicate, verify_actions, verify_exchange_relations, verify_norm_identity, TauVariant};
use symcoh::{AbGroup, AbHom, Int};

const GROUPS: [&str; 8] = ["C1", "C2", "C3", "C4", "C5", "C2xC2", "S3", "D4"];
const TRIVIAL: [&str; 5] = ["trivial:Z", "trivial:Z/2", "trivial:Z/3", "trivial:Z/4", "trivial:Z/5"];

struct Pair {
    group: FinGroup,
    module: GModule,
    top: usize,
}

impl Pair {
    fn name(&self) -> String {
        format!("({}, {})", self.group.label(), self.module.label())
    }
}

fn battery() -> Vec<Pair> {
    let mut out = Vec::new();
    for g in GROUPS {
        let group = make_group(g).unwrap();
        let top = if group.order() <= 4 { 4 } else { 3 };
        for m in TRIVIAL {
            out.push(Pair { module: parse_module(&group, m).unwrap(), group: group.clone(), top });
        }
    }
    let c2 = make_group("C2").unwrap();
    out.push(Pair { module: parse_module(&c2, "sign:Z").unwrap(), group: c2, top: 4 });
    out
}

fn pair(g: &str, m: &str) -> GModule {
    parse_module(&make_group(g).unwrap(), m).unwrap()
}

fn grp(f: &[i64]) -> AbGroup {
    AbGroup::from_i64(f).unwrap()
}

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: symcoh::Error) -> String {
    e.to_string()
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<bool, String>, what: &str) -> Result<(), String> {
    let t = Instant::now();
    let ok = f()?;
    let dt = t.elapsed();
    check(ok, || format!("{what} has the wrong value"))?;
    check(dt < limit, || format!("{what} took {dt:?}"))
}

fn criterion_1() -> Outcome {
    let limit = Duration::from_secs(5);
    let c2 = pair("C2", "trivial:Z");
    let c4 = pair("C4", "trivial:Z");
    timed(limit, || Ok(cohomology(&c2, 2).map_err(err)?.group_value == grp(&[2])), "H^2(C2, Z)")?;
    timed(limit, || Ok(symmetric_cohomology(&c2, 2).map_err(err)?.group_value.is_trivial()), "HS^2(C2, Z)")?;
    timed(limit, || Ok(cohomology(&c4, 2).map_err(err)?.group_value == grp(&[4])), "H^2(C4, Z)")?;
    timed(limit, || Ok(symmetric_cohomology(&c4, 2).map_err(err)?.group_value == grp(&[2])), "HS^2(C4, Z)")?;
    Ok("H^2(C2,Z)=Z/2, HS^2(C2,Z)=0, H^2(C4,Z)=Z/4, HS^2(C4,Z)=Z/2".into())
}

fn criterion_2() -> Outcome {
    let c = comparison_map(&pair("C4", "trivial:Z"), 2).map_err(err)?;
    let order = c.image.order().unwrap();
    check(order == Int::from(2), || format!("image has order {order}"))?;
    Ok(format!("image {} of order 2 inside {}", c.image, c.ordinary.group_value))
}

fn criterion_3(b: &[Pair]) -> Outcome {
    for p in b {
        let c = comparison_map(&p.module, 2).map_err(err)?;
        check(c.is_injective(), || format!("{} has kernel {}", p.name(), c.kernel))?;
    }
    Ok(format!("kernel 0 for all {} pairs", b.len()))
}

fn criterion_4(b: &[Pair]) -> Outcome {
    let mut count = 0;
    for p in b.iter().filter(|p| ["C3", "C5"].contains(&p.group.label())) {
        let c = comparison_map(&p.module, 2).map_err(err)?;
        check(c.is_isomorphism(), || format!("{}: HS^2 = {}, H^2 = {}, image {}", p.name(), c.symmetric.group_value, c.ordinary.group_value, c.image))?;
        count += 1;
    }
    Ok(format!("isomorphism for {count} odd-order pairs"))
}

fn criterion_5(b: &[Pair]) -> Outcome {
    let mut identities = 0;
    for p in b {
        for n in 0..=p.top {
            let s = CochainSpace::new(&p.module, n).map_err(err)?;
            for c in verify_actions(&s).map_err(err)? {
                check(c.holds, || format!("{} n={n}: {} {:?}", p.name(), c.identity, c.indices))?;
                identities += 1;
            }
            let r = verify_exchange_relations(&s, TauVariant::Standard).map_err(err)?;
            if let Some(v) = r.violations().next() {
                return Err(format!("{} n={n}: {} i={} j={}", p.name(), v.family.describe(), v.i, v.j));
            }
            identities += r.checks.len();
            if n <= 3 {
                let r = verify_norm_identity(&s).map_err(err)?;
                check(r.holds(), || format!("{} n={n}: norm identity {r:?}", p.name()))?;
                identities += 2 + r.face_links.len();
            }
        }
    }
    Ok(format!("{identities} identity instances hold"))
}

fn criterion_6() -> Outcome {
    let mut classes = 0;
    for (g, m) in [("C2", "trivial:Z/2"), ("C2", "trivial:Z/4"), ("C3", "trivial:Z/3"), ("C4", "trivial:Z/2")] {
        let (_, _, reports) = extension_classes(&pair(g, m)).map_err(err)?;
        for r in &reports {
            check(r.agrees(), || format!("({g}, {m}) class {:?}: image {} section {}", r.class, r.symmetric_class, r.witness.is_some()))?;
            if r.class.is_zero() {
                check(r.witness.is_some(), || format!("({g}, {m}) split extension has no witness"))?;
            }
            classes += 1;
        }
        if (g, m) == ("C2", "trivial:Z/2") {
            let cyclic = reports.iter().find(|r| !r.class.is_zero()).ok_or("no nonsplit class")?;
            check(cyclic.witness.is_none(), || "Z/4 over C2 reports a symmetric section".into())?;
        }
    }
    Ok(format!("{classes} classes: in the image iff a symmetric section exists"))
}

fn criterion_7(b: &[Pair]) -> Outcome {
    let mut instances = 0;
    for p in b {
        for n in 0..=p.top.min(3) {
            if injectivity_predicate(&p.module, n) {
                let c = comparison_map(&p.module, n).map_err(err)?;
                check(c.is_injective(), || format!("{} n={n}: kernel {}", p.name(), c.kernel))?;
                instances += 1;
            }
        }
    }
    check(instances > 0, || "the predicate never held".into())?;
    Ok(format!("kernel 0 in all {instances} instances where the predicate holds"))
}

fn criterion_8(b: &[Pair]) -> Outcome {
    let mut reversed_fails = 0;
    let mut total = 0;
    for p in b {
        for n in 0..=3 {
            let s = CochainSpace::new(&p.module, n).map_err(err)?;
            let r = verify_remark(&s).map_err(err)?;
            check(r.intertwines, || format!("{} n={n}: d j != j d~", p.name()))?;
            check(r.invertible, || format!("{} n={n}: j not invertible", p.name()))?;
            check(r.homology_matches(), || format!("{} n={n}: {} vs {}", p.name(), r.alt_homology, r.cohomology))?;
            total += 1;
            if !r.reversed {
                reversed_fails += 1;
            }
        }
    }
    Ok(format!(
        "d_n j_n = j_(n+1) d~_n and homology match in {total} instances (j as displayed maps the d~ complex to the standard one; the order j_(n+1) d_n = d~_n j_n fails in {reversed_fails})"
    ))
}

fn criterion_9(b: &[Pair]) -> Outcome {
    // cyclic resolution Z --0--> Z --m--> Z: H^2 = Z / mZ
    for m in 2..=5i64 {
        let oracle = AbGroup::from_orders(&[Int::from(m)]).map_err(err)?;
        let h = cohomology(&pair(&format!("C{m}"), "trivial:Z"), 2).map_err(err)?.group_value;
        check(h == oracle, || format!("H^2(C{m}, Z) = {h}, oracle {oracle}"))?;
    }
    for p in b {
        // A^G as the common kernel of g - 1
        let id = AbHom::identity(p.module.base());
        let conds = p.group.elements().map(|g| p.module.action(g).sub(&id)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let fixed = AbHom::stack(&conds).map_err(err)?.kernel().map_err(err)?.0;
        let h0 = cohomology(&p.module, 0).map_err(err)?.group_value;
        check(h0 == fixed, || format!("{}: H^0 = {h0}, A^G = {fixed}", p.name()))?;
        if p.group.order() == 1 {
            for n in 1..=p.top {
                let h = cohomology(&p.module, n).map_err(err)?.group_value;
                check(h.is_trivial(), || format!("{} n={n}: {h}", p.name()))?;
            }
        }
    }
    Ok("cyclic oracle, H^0 = A^G, H^n(C1, A) = 0".into())
}

fn main() {
    let start = Instant::now();
    let b = battery();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&b)),
        (4, criterion_4(&b)),
        (5, criterion_5(&b)),
        (6, criterion_6()),
        (7, criterion_7(&b)),
        (8, criterion_8(&b)),
        (9, criterion_9(&b)),
    ];
    let mut failed = 0;
    for (k, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {k}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {k}: {msg}");
            }
        }
    }
    println!("{} of {} criteria pass ({:.1?})", results.len() - failed, results.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
