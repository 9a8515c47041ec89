use std::fmt::Write as _;

use crate::text::{directives, Directive, ParseError};

use super::presentation::PresentationData;

/// Reads a `.ttg` file into raw tables. Objects must be declared before use; validation of
/// the tables is left to [`super::TTPresentation::new`].
pub fn parse_ttg(text: &str) -> Result<PresentationData, ParseError> {
    let mut data = PresentationData::default();
    let lookup = |data: &PresentationData, d: &Directive, name: &str| {
        data.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| d.error(format!("unknown object `{name}`")))
    };
    for d in directives(text) {
        match d.keyword {
            "object" => {
                if d.args.is_empty() {
                    return Err(d.error("`object` needs at least one name"));
                }
                for name in &d.args {
                    if data.objects.iter().any(|o| o == name) {
                        return Err(d.error(format!("object `{name}` declared twice")));
                    }
                    data.objects.push(name.to_string());
                }
            }
            "unit" | "zero" => {
                d.expect_args(1)?;
                let x = lookup(&data, &d, d.args[0])?;
                let slot = if d.keyword == "unit" { &mut data.unit } else { &mut data.zero };
                if slot.replace(x).is_some() {
                    return Err(d.error(format!("`{}` given twice", d.keyword)));
                }
            }
            "tensor" => {
                d.expect_args(3)?;
                let a = lookup(&data, &d, d.args[0])?;
                let b = lookup(&data, &d, d.args[1])?;
                let c = lookup(&data, &d, d.args[2])?;
                data.tensor.push((a, b, c));
            }
            "shift" => {
                d.expect_args(2)?;
                let a = lookup(&data, &d, d.args[0])?;
                let b = lookup(&data, &d, d.args[1])?;
                data.shift.push((a, b));
            }
            "triangle" => {
                d.expect_args(3)?;
                let x = lookup(&data, &d, d.args[0])?;
                let y = lookup(&data, &d, d.args[1])?;
                let z = lookup(&data, &d, d.args[2])?;
                data.triangles.push([x, y, z]);
            }
            "summand" => {
                d.expect_args(2)?;
                let a = lookup(&data, &d, d.args[0])?;
                let b = lookup(&data, &d, d.args[1])?;
                data.summands.push((a, b));
            }
            "coprod" => {
                if d.args.len() < 3 || d.args[1] != "=" {
                    return Err(d.error("expected `coprod <c> = <a> <b> ...`"));
                }
                let c = lookup(&data, &d, d.args[0])?;
                let members = d.args[2..]
                    .iter()
                    .map(|m| lookup(&data, &d, m))
                    .collect::<Result<Vec<_>, _>>()?;
                data.coproducts.push((members, c));
            }
            other => return Err(d.error(format!("unknown directive `{other}`"))),
        }
    }
    Ok(data)
}

pub fn write_ttg(data: &PresentationData) -> String {
    let name = |i: usize| data.objects[i].as_str();
    let mut out = String::new();
    for o in &data.objects {
        writeln!(out, "object {o}").unwrap();
    }
    if let Some(u) = data.unit {
        writeln!(out, "unit {}", name(u)).unwrap();
    }
    if let Some(z) = data.zero {
        writeln!(out, "zero {}", name(z)).unwrap();
    }
    for &(a, b, c) in &data.tensor {
        writeln!(out, "tensor {} {} {}", name(a), name(b), name(c)).unwrap();
    }
    for &(a, b) in &data.shift {
        writeln!(out, "shift {} {}", name(a), name(b)).unwrap();
    }
    for &[x, y, z] in &data.triangles {
        writeln!(out, "triangle {} {} {}", name(x), name(y), name(z)).unwrap();
    }
    for &(a, b) in &data.summands {
        writeln!(out, "summand {} {}", name(a), name(b)).unwrap();
    }
    for (members, c) in &data.coproducts {
        let ms: Vec<&str> = members.iter().map(|&m| name(m)).collect();
        writeln!(out, "coprod {} = {}", name(*c), ms.join(" ")).unwrap();
    }
    out
}
