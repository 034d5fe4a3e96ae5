//! `--cap NAME=VALUE` overrides.

use setmap::Caps;

struct CapInfo {
    name: &'static str,
    growth: &'static str,
    /// Rough step count at a given limit.
    estimate: fn(f64) -> f64,
}

fn bell(n: f64) -> f64 {
    let n = n as usize;
    let mut row = vec![1.0f64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &r in &row {
            next.push(next.last().unwrap() + r);
        }
        row = next;
    }
    row[0]
}

const CAPS: &[CapInfo] = &[
    CapInfo { name: "binomial_ground", growth: "3^n", estimate: |n| 3f64.powf(n) },
    CapInfo { name: "expand_subset", growth: "Bell(n)", estimate: bell },
    CapInfo { name: "edges", growth: "2^m", estimate: |m| 2f64.powf(m) },
    CapInfo { name: "stable_vertices", growth: "Bell(n)", estimate: bell },
    CapInfo {
        name: "pair_count_subset",
        growth: "Bell(n) 2^(n(n-1)/2)",
        estimate: |n| bell(n) * 2f64.powf(n * (n - 1.0) / 2.0),
    },
    CapInfo { name: "verify_subset", growth: "Bell(n)", estimate: bell },
    CapInfo { name: "abel_blocks", growth: "2^l", estimate: |l| 2f64.powf(l) },
    CapInfo { name: "abel_identity_blocks", growth: "Bell(l)", estimate: bell },
    CapInfo { name: "tail_blocks", growth: "2^l w^l", estimate: |l| 18f64.powf(l) },
    CapInfo { name: "tail_weight", growth: "w^l", estimate: |w| w.powf(5.0) },
    CapInfo { name: "coloring_leaves", growth: "x^n", estimate: |v| v },
];

pub fn cap_names() -> impl Iterator<Item = &'static str> {
    CAPS.iter().map(|c| c.name)
}

fn field<'a>(caps: &'a mut Caps, name: &str) -> Option<CapField<'a>> {
    Some(match name {
        "binomial_ground" => CapField::Size(&mut caps.binomial_ground),
        "expand_subset" => CapField::Size(&mut caps.expand_subset),
        "edges" => CapField::Size(&mut caps.edges),
        "stable_vertices" => CapField::Size(&mut caps.stable_vertices),
        "pair_count_subset" => CapField::Size(&mut caps.pair_count_subset),
        "verify_subset" => CapField::Size(&mut caps.verify_subset),
        "abel_blocks" => CapField::Size(&mut caps.abel_blocks),
        "abel_identity_blocks" => CapField::Size(&mut caps.abel_identity_blocks),
        "tail_blocks" => CapField::Size(&mut caps.tail_blocks),
        "tail_weight" => CapField::Size(&mut caps.tail_weight),
        "coloring_leaves" => CapField::Count(&mut caps.coloring_leaves),
        _ => return None,
    })
}

enum CapField<'a> {
    Size(&'a mut usize),
    Count(&'a mut u64),
}

/// Applies `NAME=VALUE` overrides, returning one warning line per override.
pub fn apply_overrides(caps: &mut Caps, overrides: &[String]) -> Result<Vec<String>, String> {
    let mut warnings = Vec::new();
    for spec in overrides {
        let (name, value) =
            spec.split_once('=').ok_or_else(|| format!("--cap expects NAME=VALUE, got {spec:?}"))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| format!("--cap {name}: not a nonnegative integer: {value:?}"))?;
        let known =
            || format!("unknown cap {name:?}; known caps: {}", cap_names().collect::<Vec<_>>().join(", "));
        let info = CAPS.iter().find(|c| c.name == name).ok_or_else(known)?;
        let old = match field(caps, name).ok_or_else(known)? {
            CapField::Size(f) => std::mem::replace(f, value as usize) as u64,
            CapField::Count(f) => std::mem::replace(f, value),
        };
        warnings.push(format!(
            "warning: cap {name} changed from {old} to {value}; cost grows as {}, roughly {:.1e} steps at the new limit",
            info.growth,
            (info.estimate)(value as f64)
        ));
    }
    Ok(warnings)
}
