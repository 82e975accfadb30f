//! Parsed problem instances: either a linear circle action on C^N or a
//! labeled polytope, each carrying its Delzant data.

use crate::arith::{parse_rat, show_rat, Int, Rat};
use crate::delzant::{circle_action_data, delzant_lift, CircleAction, DelzantData, Mode};
use crate::error::{Error, Result};
use crate::polytope::{parse_polytope, render_polytope, LabeledPolytope};

#[derive(Clone, Debug)]
pub enum Instance {
    Circle {
        weights: Vec<Int>,
        level: Rat,
        data: DelzantData,
    },
    Polytope {
        polytope: LabeledPolytope,
        data: DelzantData,
    },
}

impl Instance {
    pub fn circle(weights: Vec<Int>, level: Rat) -> Result<Instance> {
        let action = CircleAction::new(weights.clone())?;
        let data = circle_action_data(&action, &level)?;
        Ok(Instance::Circle {
            weights,
            level,
            data,
        })
    }

    pub fn polytope(polytope: LabeledPolytope) -> Result<Instance> {
        let data = delzant_lift(&polytope)?;
        Ok(Instance::Polytope { polytope, data })
    }

    pub fn data(&self) -> &DelzantData {
        match self {
            Instance::Circle { data, .. } => data,
            Instance::Polytope { data, .. } => data,
        }
    }

    pub fn mode(&self) -> Mode {
        self.data().mode
    }

    pub fn polytope_ref(&self) -> Option<&LabeledPolytope> {
        match self {
            Instance::Polytope { polytope, .. } => Some(polytope),
            Instance::Circle { .. } => None,
        }
    }

    /// Canonical echo of the parsed input; parsing it again reproduces an
    /// identical instance.
    pub fn canonical_echo(&self) -> String {
        match self {
            Instance::Circle { weights, level, .. } => {
                let ws = weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("mode circle\nweights {}\nlevel {}\n", ws, show_rat(level))
            }
            Instance::Polytope { polytope, .. } => render_polytope(polytope),
        }
    }
}

pub fn parse_input(text: &str) -> Result<Instance> {
    let mode = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| l.starts_with("mode"))
        .ok_or_else(|| Error::Parse("missing `mode` line".into()))?;
    match mode.split_whitespace().nth(1) {
        Some("circle") => parse_circle(text),
        Some("polytope") => Ok(Instance::polytope(parse_polytope(text)?)?),
        other => Err(Error::Parse(format!("unknown mode {other:?}"))),
    }
}

fn parse_circle(text: &str) -> Result<Instance> {
    let mut weights: Option<Vec<Int>> = None;
    let mut level = Rat::from_integer(Int::from(1));
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "mode" => {}
            "weights" => {
                weights = Some(
                    rest.split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|_| Error::Parse(format!("bad weight {t}")))
                        })
                        .collect::<Result<_>>()?,
                );
            }
            "level" => {
                level =
                    parse_rat(rest).ok_or_else(|| Error::Parse(format!("bad level {rest}")))?;
            }
            other => return Err(Error::Parse(format!("unknown keyword {other}"))),
        }
    }
    let weights = weights.ok_or_else(|| Error::Parse("missing `weights` line".into()))?;
    Instance::circle(weights, level)
}
