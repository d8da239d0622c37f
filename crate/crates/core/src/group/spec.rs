//! Text formats: the group spec mini-language (`cyclic:N`, `dihedral:N`,
//! `sym:N`, `alt:N`, `quaternion:8`, `product:<spec>x<spec>`, `table:<path>`),
//! subgroup specs, and the plain-text Cayley table format.

use std::path::Path;

use super::{named_group, subgroup_from_generators, FiniteGroup, GroupError, GroupFamily};

/// Parses the Cayley table text format: first line `g`, then `g` lines of
/// `g` space-separated 0-based indices (row = left factor).
pub fn parse_cayley_table(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let order: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("missing order line".into()))?
        .parse()
        .map_err(|e| GroupError::Parse(format!("bad order: {e}")))?;
    let mut rows = Vec::with_capacity(order);
    for r in 0..order {
        let line = lines
            .next()
            .ok_or_else(|| GroupError::Parse(format!("missing row {r}")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GroupError::Parse(format!("row {r}: {e}")))?;
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(GroupError::Parse("trailing data after table".into()));
    }
    FiniteGroup::from_cayley_table(&rows)
}

pub fn render_cayley_table(group: &FiniteGroup) -> String {
    let mut out = format!("{}\n", group.order());
    for row in group.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn parse_family(spec: &str) -> Result<GroupFamily, GroupError> {
    let bad = || GroupError::UnsupportedSpec(spec.to_string());
    let (family, arg) = spec.split_once(':').ok_or_else(bad)?;
    let num = || arg.parse::<usize>().map_err(|_| bad());
    Ok(match family {
        "cyclic" => GroupFamily::Cyclic(num()?),
        "dihedral" => GroupFamily::Dihedral(num()?),
        "sym" => GroupFamily::Symmetric(num()?),
        "alt" => GroupFamily::Alternating(num()?),
        "quaternion" if arg == "8" => GroupFamily::Quaternion8,
        "product" => {
            // Split at the first `x` whose two sides both parse.
            arg.match_indices('x')
                .find_map(|(i, _)| {
                    let l = parse_family(&arg[..i]).ok()?;
                    let r = parse_family(&arg[i + 1..]).ok()?;
                    Some(GroupFamily::Product(Box::new(l), Box::new(r)))
                })
                .ok_or_else(bad)?
        }
        _ => return Err(bad()),
    })
}

/// Parses a group spec; `table:<path>` reads a Cayley table file.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup, GroupError> {
    if let Some(path) = spec.strip_prefix("table:") {
        let text = std::fs::read_to_string(Path::new(path)).map_err(|e| GroupError::Parse(format!("{path}: {e}")))?;
        return parse_cayley_table(&text);
    }
    named_group(&parse_family(spec)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    Generators(Vec<usize>),
    All,
    Trivial,
}

impl SubgroupSpec {
    pub fn members(&self, group: &FiniteGroup) -> Result<Vec<bool>, GroupError> {
        match self {
            SubgroupSpec::All => Ok(vec![true; group.order()]),
            SubgroupSpec::Trivial => subgroup_from_generators(group, &[]),
            SubgroupSpec::Generators(g) => subgroup_from_generators(group, g),
        }
    }
}

pub fn parse_subgroup_spec(spec: &str) -> Result<SubgroupSpec, GroupError> {
    match spec {
        "all" => Ok(SubgroupSpec::All),
        "trivial" => Ok(SubgroupSpec::Trivial),
        _ => {
            let list = spec
                .strip_prefix("gens:")
                .ok_or_else(|| GroupError::UnsupportedSpec(spec.to_string()))?;
            let gens = list
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| GroupError::UnsupportedSpec(spec.to_string()))?;
            Ok(SubgroupSpec::Generators(gens))
        }
    }
}
