//! Named-graph shorthand: "P:8", "C1:12", "Gt:3", "Gttm:2,4", "D:7",
//! "theta:3,4,5", "K:4", registry letters like "o" or "(o)", and disjoint
//! unions joined with "+".

use crate::error::GraphError;
use crate::graph::{self, MixedGraph};
use crate::registry::Registry;

/// Resolves a single name or a "+"-joined union of names.
pub fn parse_graph_name(input: &str, registry: &Registry) -> Result<MixedGraph, GraphError> {
    let mut parts = input.split('+').map(str::trim).filter(|s| !s.is_empty());
    let first = parts
        .next()
        .ok_or_else(|| GraphError::Parse("empty graph name".into()))?;
    let mut g = parse_single(first, registry)?;
    for part in parts {
        g = g.disjoint_union(&parse_single(part, registry)?);
    }
    Ok(g)
}

fn parse_single(raw: &str, registry: &Registry) -> Result<MixedGraph, GraphError> {
    let name = raw.trim().trim_start_matches('(').trim_end_matches(')');
    if let Some((family, params)) = name.split_once(':') {
        let nums: Result<Vec<usize>, _> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        let nums = nums.map_err(|_| {
            GraphError::Parse(format!("bad parameter list in {raw:?}: expected integers"))
        })?;
        let want = |count: usize| -> Result<(), GraphError> {
            if nums.len() == count {
                Ok(())
            } else {
                Err(GraphError::Parse(format!(
                    "{family} takes {count} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        return match family {
            "P" => {
                want(1)?;
                if nums[0] < 1 {
                    return Err(GraphError::BadParameter("P:n needs n >= 1".into()));
                }
                Ok(graph::path(nums[0]))
            }
            "C" | "C0" => {
                want(1)?;
                graph::cycle(nums[0], 0)
            }
            "C1" => {
                want(1)?;
                graph::cycle(nums[0], 1)
            }
            "C2" => {
                want(1)?;
                graph::cycle(nums[0], 2)
            }
            "Gt" => {
                want(1)?;
                graph::g_t(nums[0])
            }
            "Gttm" => {
                want(2)?;
                graph::g_t_tm(nums[0], nums[1])
            }
            "D" => {
                want(1)?;
                graph::d_tree(nums[0])
            }
            "K" => {
                want(1)?;
                Ok(graph::complete(nums[0]))
            }
            "theta" => {
                want(3)?;
                graph::theta(nums[0], nums[1], nums[2], &[])
            }
            "E" | "Y1" | "Y2" => registry
                .get(&format!("{family}:{}", nums[0]))
                .cloned()
                .map_err(|_| {
                    GraphError::UnknownFamily(format!(
                        "{raw} is not in the registry; run the reconstruction first"
                    ))
                }),
            other => Err(GraphError::UnknownFamily(other.to_string())),
        };
    }
    // Bare name: a registry letter.
    registry.get(name).cloned().map_err(|_| {
        GraphError::UnknownFamily(format!(
            "{name:?} is not a known family or registry letter"
        ))
    })
}

/// Short structural description used in reports: component order/size pairs.
pub fn describe_components(g: &MixedGraph) -> String {
    let comps = g.components();
    let parts: Vec<String> = comps
        .iter()
        .map(|c| {
            let sub = g.induced(c);
            format!("({}v,{}e)", sub.order(), sub.size())
        })
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn parses_families_and_unions() {
        let reg = Registry::new();
        assert_eq!(parse_graph_name("P:4", &reg).unwrap(), path(4));
        assert_eq!(parse_graph_name("C1:5", &reg).unwrap(), cycle(5, 1).unwrap());
        let u = parse_graph_name("P:2 + C2:4", &reg).unwrap();
        assert_eq!((u.order(), u.size()), (6, 5));
        assert!(parse_graph_name("o", &reg).is_err());
        let mut reg = Registry::new();
        reg.insert("o", path(6));
        assert_eq!(parse_graph_name("(o)", &reg).unwrap(), path(6));
        assert!(parse_graph_name("Q:3", &reg).is_err());
        assert!(parse_graph_name("P:x", &reg).is_err());
    }
}
