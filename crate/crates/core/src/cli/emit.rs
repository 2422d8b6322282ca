//! Canonical emitter for the workspace text format. Parsing what this
//! writes yields an equal workspace: frames are written as their
//! elements plus covering pairs, relations one entry per line in
//! row-major order, degrees in their shortest exact form.

use std::fmt::Write;

use super::{Workspace, WorkspaceDoc};

pub fn emit_workspace(ws: &Workspace) -> String {
    emit_text(&ws.to_doc())
}

pub fn emit_text(doc: &WorkspaceDoc) -> String {
    let mut out = String::new();
    for frame in &doc.frames {
        writeln!(out, "frame {} {{", frame.name).unwrap();
        writeln!(out, "  elements {}", frame.elements.join(" ")).unwrap();
        for (a, b) in &frame.leq {
            writeln!(out, "  leq {a} {b}").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out.push('\n');
    }
    for system in &doc.systems {
        writeln!(out, "system {} {{", system.name).unwrap();
        writeln!(out, "  frame {}", system.frame).unwrap();
        writeln!(out, "  points {}", system.points.join(" ")).unwrap();
        for (p, x, d) in &system.alpha {
            writeln!(out, "  alpha {p} {x} {d}").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out.push('\n');
    }
    for object in &doc.objects {
        writeln!(out, "object {} {{", object.name).unwrap();
        writeln!(out, "  points {}", object.points.join(" ")).unwrap();
        writeln!(out, "  opens {}", object.opens.join(" ")).unwrap();
        for (p, x, d) in &object.alpha {
            writeln!(out, "  alpha {p} {x} {d}").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out.push('\n');
    }
    for morphism in &doc.morphisms {
        writeln!(out, "morphism {} {{", morphism.name).unwrap();
        writeln!(out, "  source {}", morphism.source).unwrap();
        writeln!(out, "  target {}", morphism.target).unwrap();
        for (a, b) in &morphism.f {
            writeln!(out, "  f {a} {b}").unwrap();
        }
        for (a, b) in &morphism.g {
            writeln!(out, "  g {a} {b}").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out.push('\n');
    }
    out
}
