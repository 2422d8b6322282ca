//! The text-document interface: one self-contained workspace file holds
//! named `frame`, `system`, `object` and `morphism` blocks, one fact per
//! line. The same schema is also accepted as JSON (files ending in
//! `.json`), and everything emitted can be parsed back to an equal
//! workspace.
//!
//! Frames are validated while loading — a document whose frame fails the
//! lattice axioms is a mathematical failure, not a syntax error. Systems
//! and morphisms load structurally and are checked only when a command
//! asks, so deliberately invalid fixtures can be loaded for negative
//! tests.

mod commands;
mod emit;
mod parser;

pub use commands::{main_with_args, run_command, Cli};
pub use emit::{emit_text, emit_workspace};
pub use parser::parse_text;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degrees::Degree;
use crate::dialectica::{DialObject, FuzzyRelation};
use crate::frames::{FiniteFrame, FrameError};
use crate::topsys::FuzzyTopSystem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: unknown reference {name:?}")]
    UnknownReference { line: usize, name: String },
    #[error("line {line}: duplicate name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("invalid degree {text:?} at line {line}, column {col}")]
    InvalidDegree { line: usize, col: usize, text: String },
    #[error("frame {name:?} is not a frame: {source}")]
    InvalidFrame { name: String, source: FrameError },
    #[error("in block {name:?}: {msg}")]
    InvalidBlock { name: String, msg: String },
}

impl ParseError {
    /// Mathematical failures exit with 1, malformed input with 2.
    pub fn is_mathematical(&self) -> bool {
        matches!(self, ParseError::InvalidFrame { .. })
    }
}

// ---------------------------------------------------------------------
// Raw document schema (shared by the text format and JSON)
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocFrame {
    pub name: String,
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocSystem {
    pub name: String,
    pub frame: String,
    pub points: Vec<String>,
    pub alpha: Vec<(String, String, Degree)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocObject {
    pub name: String,
    pub points: Vec<String>,
    pub opens: Vec<String>,
    pub alpha: Vec<(String, String, Degree)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocMorphism {
    pub name: String,
    pub source: String,
    pub target: String,
    pub f: Vec<(String, String)>,
    pub g: Vec<(String, String)>,
}

/// A parsed document before name resolution.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkspaceDoc {
    #[serde(default)]
    pub frames: Vec<DocFrame>,
    #[serde(default)]
    pub systems: Vec<DocSystem>,
    #[serde(default)]
    pub objects: Vec<DocObject>,
    #[serde(default)]
    pub morphisms: Vec<DocMorphism>,
}

// ---------------------------------------------------------------------
// Resolved workspace
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemEntry {
    pub name: String,
    pub frame_name: String,
    pub system: FuzzyTopSystem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub f: Vec<(String, String)>,
    pub g: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    pub frames: Vec<(String, FiniteFrame)>,
    pub systems: Vec<SystemEntry>,
    pub objects: Vec<(String, DialObject)>,
    pub morphisms: Vec<MorphismEntry>,
}

impl Workspace {
    pub fn frame(&self, name: &str) -> Option<&FiniteFrame> {
        self.frames.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn system(&self, name: &str) -> Option<&SystemEntry> {
        self.systems.iter().find(|s| s.name == name)
    }

    pub fn object(&self, name: &str) -> Option<&DialObject> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismEntry> {
        self.morphisms.iter().find(|m| m.name == name)
    }

    /// An object usable as a morphism endpoint: a named object, or the
    /// underlying object of a named system.
    pub fn endpoint_object(&self, name: &str) -> Option<DialObject> {
        if let Some(obj) = self.object(name) {
            return Some(obj.clone());
        }
        self.system(name).map(|s| s.system.underlying_object())
    }

    /// Builds the resolved workspace, validating frames and the
    /// structural shape of every block.
    pub fn from_doc(doc: &WorkspaceDoc) -> Result<Workspace, ParseError> {
        let mut ws = Workspace::default();

        for frame_doc in &doc.frames {
            if ws.frame(&frame_doc.name).is_some() {
                return Err(ParseError::DuplicateName {
                    line: 0,
                    name: frame_doc.name.clone(),
                });
            }
            let frame = FiniteFrame::validate(&frame_doc.elements, &frame_doc.leq).map_err(
                |source| match source {
                    FrameError::DuplicateElement(e) => ParseError::InvalidBlock {
                        name: frame_doc.name.clone(),
                        msg: format!("duplicate element {e:?}"),
                    },
                    FrameError::UnknownElement(e) => ParseError::UnknownReference {
                        line: 0,
                        name: e,
                    },
                    source => ParseError::InvalidFrame {
                        name: frame_doc.name.clone(),
                        source,
                    },
                },
            )?;
            ws.frames.push((frame_doc.name.clone(), frame));
        }

        for sys_doc in &doc.systems {
            if ws.system(&sys_doc.name).is_some() {
                return Err(ParseError::DuplicateName {
                    line: 0,
                    name: sys_doc.name.clone(),
                });
            }
            let frame = ws
                .frame(&sys_doc.frame)
                .ok_or_else(|| ParseError::UnknownReference {
                    line: 0,
                    name: sys_doc.frame.clone(),
                })?
                .clone();
            let alpha = resolve_relation(
                &sys_doc.points,
                frame.elements(),
                &sys_doc.alpha,
                &sys_doc.name,
            )?;
            let system = FuzzyTopSystem::new(sys_doc.points.clone(), frame, alpha).map_err(
                |e| ParseError::InvalidBlock {
                    name: sys_doc.name.clone(),
                    msg: e.to_string(),
                },
            )?;
            ws.systems.push(SystemEntry {
                name: sys_doc.name.clone(),
                frame_name: sys_doc.frame.clone(),
                system,
            });
        }

        for obj_doc in &doc.objects {
            if ws.object(&obj_doc.name).is_some() {
                return Err(ParseError::DuplicateName {
                    line: 0,
                    name: obj_doc.name.clone(),
                });
            }
            let alpha =
                resolve_relation(&obj_doc.points, &obj_doc.opens, &obj_doc.alpha, &obj_doc.name)?;
            let object = DialObject::new(obj_doc.points.clone(), obj_doc.opens.clone(), alpha)
                .map_err(|e| ParseError::InvalidBlock {
                    name: obj_doc.name.clone(),
                    msg: e.to_string(),
                })?;
            ws.objects.push((obj_doc.name.clone(), object));
        }

        for mor_doc in &doc.morphisms {
            if ws.morphism(&mor_doc.name).is_some() {
                return Err(ParseError::DuplicateName {
                    line: 0,
                    name: mor_doc.name.clone(),
                });
            }
            for endpoint in [&mor_doc.source, &mor_doc.target] {
                if ws.endpoint_object(endpoint).is_none() {
                    return Err(ParseError::UnknownReference {
                        line: 0,
                        name: endpoint.clone(),
                    });
                }
            }
            ws.morphisms.push(MorphismEntry {
                name: mor_doc.name.clone(),
                source: mor_doc.source.clone(),
                target: mor_doc.target.clone(),
                f: mor_doc.f.clone(),
                g: mor_doc.g.clone(),
            });
        }

        Ok(ws)
    }

    pub fn to_doc(&self) -> WorkspaceDoc {
        WorkspaceDoc {
            frames: self
                .frames
                .iter()
                .map(|(name, frame)| DocFrame {
                    name: name.clone(),
                    elements: frame.elements().to_vec(),
                    leq: frame.cover_pairs(),
                })
                .collect(),
            systems: self
                .systems
                .iter()
                .map(|entry| DocSystem {
                    name: entry.name.clone(),
                    frame: entry.frame_name.clone(),
                    points: entry.system.points().to_vec(),
                    alpha: relation_entries(
                        entry.system.points(),
                        entry.system.frame().elements(),
                        |u, x| entry.system.alpha(u, x),
                    ),
                })
                .collect(),
            objects: self
                .objects
                .iter()
                .map(|(name, obj)| DocObject {
                    name: name.clone(),
                    points: obj.points().to_vec(),
                    opens: obj.opens().to_vec(),
                    alpha: relation_entries(obj.points(), obj.opens(), |u, x| obj.alpha(u, x)),
                })
                .collect(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| DocMorphism {
                    name: m.name.clone(),
                    source: m.source.clone(),
                    target: m.target.clone(),
                    f: m.f.clone(),
                    g: m.g.clone(),
                })
                .collect(),
        }
    }
}

fn relation_entries(
    rows: &[String],
    cols: &[String],
    get: impl Fn(usize, usize) -> Degree,
) -> Vec<(String, String, Degree)> {
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for (u, row) in rows.iter().enumerate() {
        for (x, col) in cols.iter().enumerate() {
            out.push((row.clone(), col.clone(), get(u, x)));
        }
    }
    out
}

fn resolve_relation(
    rows: &[String],
    cols: &[String],
    entries: &[(String, String, Degree)],
    block: &str,
) -> Result<FuzzyRelation, ParseError> {
    let mut resolved = Vec::with_capacity(entries.len());
    for (row, col, degree) in entries {
        let r = rows
            .iter()
            .position(|n| n == row)
            .ok_or_else(|| ParseError::UnknownReference {
                line: 0,
                name: row.clone(),
            })?;
        let c = cols
            .iter()
            .position(|n| n == col)
            .ok_or_else(|| ParseError::UnknownReference {
                line: 0,
                name: col.clone(),
            })?;
        resolved.push((r, c, *degree));
    }
    FuzzyRelation::from_entries(rows.len(), cols.len(), rows, cols, &resolved).map_err(|e| {
        ParseError::InvalidBlock {
            name: block.to_string(),
            msg: e.to_string(),
        }
    })
}

/// Parses a workspace from text or JSON depending on `json`.
pub fn parse_workspace(content: &str, json: bool) -> Result<Workspace, ParseError> {
    let doc = if json {
        serde_json::from_str::<WorkspaceDoc>(content).map_err(|e| ParseError::Syntax {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?
    } else {
        parse_text(content)?
    };
    Workspace::from_doc(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"
# the three-element chain and a system over it
frame C3 {
  elements bot a top
  leq bot a
  leq a top
}

system sierpinski {
  frame C3
  points p q
  alpha p bot 0
  alpha p a 1
  alpha p top 1
  alpha q bot 0
  alpha q a 0
  alpha q top 1
}

object A {
  points u
  opens x
  alpha u x 0.4
}

object B {
  points v
  opens y
  alpha v y 0.6
}

morphism h {
  source A
  target B
  f u v
  g y x
}
"#;

    #[test]
    fn parse_resolves_all_blocks() {
        let ws = parse_workspace(DOC, false).unwrap();
        assert_eq!(ws.frames.len(), 1);
        assert_eq!(ws.systems.len(), 1);
        assert_eq!(ws.objects.len(), 2);
        assert_eq!(ws.morphisms.len(), 1);
        let entry = ws.system("sierpinski").unwrap();
        assert!(entry.system.validate().is_ok());
        let a = ws.object("A").unwrap();
        assert_eq!(a.alpha(0, 0), "0.4".parse().unwrap());
    }

    #[test]
    fn text_round_trip_is_identity() {
        let ws = parse_workspace(DOC, false).unwrap();
        let emitted = emit_workspace(&ws);
        let back = parse_workspace(&emitted, false).unwrap();
        assert_eq!(back, ws);
    }

    #[test]
    fn json_round_trip_is_identity() {
        let ws = parse_workspace(DOC, false).unwrap();
        let json = serde_json::to_string_pretty(&ws.to_doc()).unwrap();
        let back = parse_workspace(&json, true).unwrap();
        assert_eq!(back, ws);
    }

    #[test]
    fn degrees_parse_exactly() {
        let ws = parse_workspace(DOC, false).unwrap();
        let a = ws.object("A").unwrap();
        assert_eq!(a.alpha(0, 0), crate::Degree::new(2, 5).unwrap());
    }

    #[test]
    fn dangling_frame_reference_is_rejected() {
        let doc = "system s {\n frame nosuch\n points p\n alpha p x 1\n}\n";
        let err = parse_workspace(doc, false).unwrap_err();
        assert!(matches!(err, ParseError::UnknownReference { .. }), "{err}");
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let block = "object A {\n points u\n opens x\n alpha u x 1\n}\n";
        let doc = format!("{block}{block}");
        let err = parse_workspace(&doc, false).unwrap_err();
        assert!(matches!(err, ParseError::DuplicateName { .. }), "{err}");
    }

    #[test]
    fn partial_alpha_table_is_rejected() {
        let doc = "object A {\n points u\n opens x y\n alpha u x 1\n}\n";
        let err = parse_workspace(doc, false).unwrap_err();
        assert!(matches!(err, ParseError::InvalidBlock { .. }), "{err}");
    }

    #[test]
    fn invalid_frame_is_a_mathematical_failure() {
        let doc = "frame M3 {\n elements bot a b c top\n leq bot a\n leq bot b\n leq bot c\n leq a top\n leq b top\n leq c top\n}\n";
        let err = parse_workspace(doc, false).unwrap_err();
        assert!(err.is_mathematical(), "{err}");
    }
}
