//! Report construction and serialization. Every command produces a Report
//! that renders both as aligned text tables and as one JSON object with
//! deterministic key order.

use inertia_core::arith::{show_rat, Rat};
use inertia_core::check::PropertyReport;
use inertia_core::flag::{FlagGamma, RootSystemData, SpecialClassTable};
use inertia_core::graded::{show_slice, GradedAbelianGroup};
use inertia_core::inertial::{
    star_exponents, star_structure_constant, structure_constants, SmileBreakdown,
};
use inertia_core::input::Instance;
use inertia_core::kirwan::KernelIdeal;
use inertia_core::poly::Poly;
use inertia_core::sectors::{sector_name, GammaTable, Logweights};
use inertia_core::{Int, RingPresentation};
use num_traits::One;
use serde_json::{json, Value};

pub struct Report {
    pub text: String,
    pub json: Value,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn print(&self, format: Format) {
        match format {
            Format::Text => print!("{}", self.text),
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json).unwrap()),
        }
    }
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            widths[i] = widths[i].max(c.len());
        }
    }
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(i, c)| pad(c, widths[i])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn sector_json(inst: &Instance, gamma: &GammaTable) -> Vec<Value> {
    gamma
        .sectors
        .iter()
        .map(|s| {
            json!({
                "name": sector_name(inst, &s.g),
                "logweights": s.g.0.iter().map(show_rat).collect::<Vec<_>>(),
                "age": show_rat(&s.age),
                "degree_shift": show_rat(&s.degree_shift),
                "in_box": s.in_box,
                "fixed_coords": s.fixed_coords.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })
        })
        .collect()
}

pub fn sectors_report(inst: &Instance, gamma: &GammaTable) -> Report {
    let n = inst.data().n;
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["g".to_string()];
    header.extend(gamma.sectors.iter().map(|s| sector_name(inst, &s.g)));
    rows.push(header);
    let mut in_box = vec!["in box".to_string()];
    in_box.extend(
        gamma
            .sectors
            .iter()
            .map(|s| if s.in_box { "*".into() } else { ".".into() }),
    );
    rows.push(in_box);
    for i in 0..n {
        let mut row = vec![format!("a_C({})", i + 1)];
        row.extend(gamma.sectors.iter().map(|s| show_rat(&s.g.0[i])));
        rows.push(row);
    }
    let mut deg = vec!["2 age(g)".to_string()];
    deg.extend(gamma.sectors.iter().map(|s| show_rat(&s.degree_shift)));
    rows.push(deg);

    let mut text = format!(
        "Gamma: {} sectors, exponent {}, box size {}\n\n",
        gamma.len(),
        gamma.exponent,
        gamma.box_elems.len()
    );
    text.push_str(&table(&rows));
    let json = json!({
        "command": "sectors",
        "input": inst.canonical_echo(),
        "exponent": gamma.exponent.to_string(),
        "box_size": gamma.box_elems.len(),
        "sectors": sector_json(inst, gamma),
    });
    Report { text, json }
}

fn generator_lines(inst: &Instance, gamma: &GammaTable, pres: &RingPresentation) -> Vec<String> {
    let mut lines = Vec::new();
    for v in &pres.ring.vars[..pres.num_coeff_vars] {
        lines.push(format!("{} (degree 2)", v.name));
    }
    for &(var, sector) in &pres.sector_vars {
        lines.push(format!(
            "{} = sector {} (degree {})",
            pres.ring.vars[var].name,
            sector_name(inst, gamma.elem(sector)),
            show_rat(&pres.ring.vars[var].degree)
        ));
    }
    lines
}

fn sector_display(pres: &RingPresentation, sector: usize) -> String {
    Poly::monomial(pres.sector_monomials[sector].clone(), Int::one()).render(&pres.ring)
}

fn product_display(pres: &RingPresentation, coeff: &Poly, target: usize) -> String {
    let t = sector_display(pres, target);
    let c = coeff.render(&pres.ring);
    if t == "1" {
        c
    } else if c == "1" {
        t
    } else if coeff.terms.len() == 1 {
        format!("{c}*{t}")
    } else {
        format!("({c})*{t}")
    }
}

pub fn inertial_report(inst: &Instance, gamma: &GammaTable, pres: &RingPresentation) -> Report {
    let sc = structure_constants(inst, gamma);
    let m = gamma.len();
    let mut text = format!("NH = {} / I\ngenerators:\n", pres.ring_header());
    for l in generator_lines(inst, gamma, pres) {
        text.push_str(&format!("  {l}\n"));
    }
    text.push_str("relations I:\n");
    for r in pres.relation_strings() {
        text.push_str(&format!("  {r}\n"));
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["*".to_string()];
    header.extend((1..m).map(|j| sector_display(pres, j)));
    rows.push(header);
    let mut products = Vec::new();
    for i in 1..m {
        let mut row = vec![sector_display(pres, i)];
        for j in 1..m {
            let (target, c) = &sc.table[&(i, j)];
            let coeff = pres.expand_coefficient(c);
            let shown = product_display(pres, &coeff, *target);
            if j >= i {
                row.push(shown.clone());
            } else {
                row.push(String::new());
            }
            if i <= j {
                products.push(json!({
                    "g": sector_name(inst, gamma.elem(i)),
                    "h": sector_name(inst, gamma.elem(j)),
                    "product": shown,
                }));
            }
        }
        rows.push(row);
    }
    if m > 1 {
        text.push_str("\nstar products (upper triangle):\n");
        text.push_str(&table(&rows));
    }
    let json = json!({
        "command": "inertial",
        "input": inst.canonical_echo(),
        "presentation": {
            "ring": pres.ring_header(),
            "generators": generator_lines(inst, gamma, pres),
            "relations": pres.relation_strings(),
        },
        "products": products,
        "sectors": sector_json(inst, gamma),
    });
    Report { text, json }
}

fn series_string(series: &std::collections::BTreeMap<Rat, usize>) -> String {
    let mut terms = Vec::new();
    for (deg, count) in series {
        if *count == 0 {
            continue;
        }
        let t = if deg == &Rat::from_integer(Int::from(0)) {
            format!("{count}")
        } else if *count == 1 {
            format!("t^{}", show_rat(deg))
        } else {
            format!("{count}*t^{}", show_rat(deg))
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cohomology_report(
    inst: &Instance,
    gamma: &GammaTable,
    pres: &RingPresentation,
    kernel: &KernelIdeal,
    kernel_polys: &[(usize, Poly)],
    series: &std::collections::BTreeMap<Rat, usize>,
    groups: Option<&GradedAbelianGroup>,
    max_degree: &Rat,
) -> Report {
    let mut text = format!("H_CR = {} / J\ngenerators:\n", pres.ring_header());
    for l in generator_lines(inst, gamma, pres) {
        text.push_str(&format!("  {l}\n"));
    }
    text.push_str("relations J:\n");
    for r in pres.relation_strings() {
        text.push_str(&format!("  {r}\n"));
    }
    text.push_str("kernel generators (one per sector and minimal facet set):\n");
    let mut kernel_json = Vec::new();
    for ((sector, poly), gen) in kernel_polys.iter().zip(&kernel.generators) {
        let name = sector_name(inst, gamma.elem(*sector));
        let rendered = poly.render(&pres.ring);
        text.push_str(&format!("  sector {name}: {rendered}\n"));
        kernel_json.push(json!({
            "sector": name,
            "coords": gen.coords.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "class": rendered,
        }));
    }
    text.push_str(&format!(
        "Poincare series (Q, up to degree {}): {}\n",
        show_rat(max_degree),
        series_string(series)
    ));
    let mut groups_json = Value::Null;
    if let Some(g) = groups {
        text.push_str(&format!(
            "graded groups (Z, up to degree {}):\n",
            show_rat(max_degree)
        ));
        let mut rows = Vec::new();
        for (deg, slice) in &g.slices {
            rows.push(vec![format!("{}:", show_rat(deg)), show_slice(slice)]);
        }
        text.push_str(&table(&rows));
        groups_json = json!(g
            .slices
            .iter()
            .map(|(deg, slice)| {
                json!({
                    "degree": show_rat(deg),
                    "group": show_slice(slice),
                    "free_rank": slice.free_rank,
                    "torsion": slice.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>());
    }
    let json = json!({
        "command": "cohomology",
        "input": inst.canonical_echo(),
        "presentation": {
            "ring": pres.ring_header(),
            "generators": generator_lines(inst, gamma, pres),
            "relations": pres.relation_strings(),
        },
        "kernel": kernel_json,
        "series": series
            .iter()
            .map(|(d, c)| json!({"degree": show_rat(d), "rank": c}))
            .collect::<Vec<_>>(),
        "groups": groups_json,
        "max_degree": show_rat(max_degree),
    });
    Report { text, json }
}

pub fn multiply_report(
    inst: &Instance,
    gamma: &GammaTable,
    pres: &RingPresentation,
    g: &Logweights,
    h: &Logweights,
    smile: &SmileBreakdown,
) -> Report {
    let (gh, star) = star_structure_constant(inst, g, h);
    let target = gamma.index_of(&gh).expect("product stays in Gamma");
    let names = pres.basis_names();
    let eps = star_exponents(g, h);
    let coeff = pres.expand_coefficient(&star);
    let result = product_display(pres, &coeff, target);

    let mut text = format!(
        "g = {}, h = {}, g*h = {}\n",
        sector_name(inst, g),
        sector_name(inst, h),
        sector_name(inst, &gh)
    );
    text.push_str("star route:\n");
    text.push_str(&format!(
        "  exponents a_i(g)+a_i(h)-a_i(gh): {}\n",
        eps.iter().map(show_rat).collect::<Vec<_>>().join(" ")
    ));
    text.push_str(&format!("  Euler factor: {}\n", star.render(&names)));
    text.push_str("obstruction-bundle route:\n");
    text.push_str(&format!(
        "  obstruction bundle on coordinates {{{}}}: epsilon = {}\n",
        smile
            .obstruction_coords
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(","),
        smile.epsilon.render(&names)
    ));
    text.push_str(&format!(
        "  pushforward Euler class on coordinates {{{}}}: {}\n",
        smile
            .pushforward_coords
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(","),
        smile.pushforward.render(&names)
    ));
    text.push_str(&format!("  product: {}\n", smile.total.render(&names)));
    let agree = smile.total == star;
    text.push_str(&format!(
        "routes agree: {}\nresult: {}\n",
        if agree { "yes" } else { "NO" },
        result
    ));
    let json = json!({
        "command": "multiply",
        "input": inst.canonical_echo(),
        "g": sector_name(inst, g),
        "h": sector_name(inst, h),
        "target": sector_name(inst, &gh),
        "star": {
            "exponents": eps.iter().map(show_rat).collect::<Vec<_>>(),
            "euler_factor": star.render(&names),
        },
        "obstruction": {
            "obstruction_coords": smile.obstruction_coords.iter().map(|i| i+1).collect::<Vec<_>>(),
            "epsilon": smile.epsilon.render(&names),
            "pushforward_coords": smile.pushforward_coords.iter().map(|i| i+1).collect::<Vec<_>>(),
            "pushforward": smile.pushforward.render(&names),
            "product": smile.total.render(&names),
        },
        "routes_agree": agree,
        "result": result,
    });
    Report { text, json }
}

pub fn flag_report(
    name: &str,
    data: &RootSystemData,
    classes: &SpecialClassTable,
    gamma: &FlagGamma,
) -> Report {
    let mut text = format!(
        "root system {}: {} roots, |W| = {}\n",
        name,
        data.all_roots.len(),
        data.weyl_order
    );
    text.push_str(&format!(
        "affine Dynkin marks: {} (affine node 1)\n\n",
        data.marks
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    let mut rows = vec![vec![
        "vertex".to_string(),
        "adjoint order".to_string(),
        "centralizer".to_string(),
        "type".to_string(),
        "|W_t|".to_string(),
        "components".to_string(),
    ]];
    let mut classes_json = Vec::new();
    for e in &classes.entries {
        let vertex = format!(
            "({})",
            e.vertex.iter().map(show_rat).collect::<Vec<_>>().join(",")
        );
        rows.push(vec![
            vertex.clone(),
            e.adjoint_order.to_string(),
            e.name.clone(),
            e.type_string.clone(),
            e.w_t_order.to_string(),
            e.component_count.to_string(),
        ]);
        classes_json.push(json!({
            "vertex": e.vertex.iter().map(show_rat).collect::<Vec<_>>(),
            "adjoint_order": e.adjoint_order.to_string(),
            "centralizer": e.name,
            "type": e.type_string,
            "weyl_subgroup_order": e.w_t_order.to_string(),
            "components": e.component_count.to_string(),
            "semisimple": e.centralizer_semisimple,
        }));
    }
    text.push_str(&table(&rows));
    let factors = if gamma.invariant_factors.is_empty() {
        "trivial".to_string()
    } else {
        gamma
            .invariant_factors
            .iter()
            .map(|f| format!("Z/{f}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    text.push_str(&format!(
        "\nGamma (simply connected case): order {}, isomorphic to {}\nfinite stabilizers: {}\n",
        gamma.group_order,
        factors,
        gamma.stabilizers.len()
    ));
    let json = json!({
        "command": "flag",
        "input": name,
        "roots": data.all_roots.len(),
        "weyl_order": data.weyl_order.to_string(),
        "marks": data.marks.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "classes": classes_json,
        "gamma": {
            "order": gamma.group_order.to_string(),
            "invariant_factors": gamma.invariant_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "finite_stabilizers": gamma.stabilizers.len(),
            "stabilizer_points": gamma.stabilizers.iter().map(|v| v.iter().map(show_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        },
    });
    Report { text, json }
}

pub fn check_report(inst: &Instance, report: &PropertyReport) -> Report {
    let mut text = String::from("property suite:\n");
    let mut checks_json = Vec::new();
    let mut passed = 0;
    let mut failed = 0;
    for c in &report.checks {
        let status = if c.failures == 0 { "pass" } else { "FAIL" };
        if c.failures == 0 {
            passed += 1;
        } else {
            failed += 1;
        }
        text.push_str(&format!(
            "  [{status}] {} ({} cases, {} failures)\n",
            c.name, c.cases, c.failures
        ));
        checks_json.push(json!({
            "name": c.name,
            "cases": c.cases,
            "failures": c.failures,
        }));
    }
    text.push_str(&format!("{passed} passed, {failed} failed\n"));
    let json = json!({
        "command": "check",
        "input": inst.canonical_echo(),
        "properties": checks_json,
        "passed": passed,
        "failed": failed,
    });
    Report { text, json }
}
