//! Line-oriented parser for the workspace text format. `#` starts a
//! comment; a block opens with `<kind> <name> {` and closes with `}` on
//! its own line; every other line inside a block is one fact.

use super::{DocFrame, DocMorphism, DocObject, DocSystem, ParseError, WorkspaceDoc};
use crate::degrees::Degree;

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let without_comment = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut chars = without_comment.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        tokens.push(Token {
            text: &without_comment[start..end],
            col: start + 1,
        });
    }
    tokens
}

enum Block {
    Frame(DocFrame),
    System(DocSystem),
    Object(DocObject),
    Morphism(DocMorphism),
}

pub fn parse_text(content: &str) -> Result<WorkspaceDoc, ParseError> {
    let mut doc = WorkspaceDoc::default();
    let mut block: Option<Block> = None;

    for (idx, raw_line) in content.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw_line);
        if tokens.is_empty() {
            continue;
        }

        match &mut block {
            None => {
                if tokens.len() != 3 || tokens[2].text != "{" {
                    return Err(ParseError::Syntax {
                        line,
                        col: tokens[0].col,
                        msg: "expected `<frame|system|object|morphism> <name> {`".to_string(),
                    });
                }
                let name = tokens[1].text.to_string();
                block = Some(match tokens[0].text {
                    "frame" => Block::Frame(DocFrame {
                        name,
                        elements: Vec::new(),
                        leq: Vec::new(),
                    }),
                    "system" => Block::System(DocSystem {
                        name,
                        frame: String::new(),
                        points: Vec::new(),
                        alpha: Vec::new(),
                    }),
                    "object" => Block::Object(DocObject {
                        name,
                        points: Vec::new(),
                        opens: Vec::new(),
                        alpha: Vec::new(),
                    }),
                    "morphism" => Block::Morphism(DocMorphism {
                        name,
                        source: String::new(),
                        target: String::new(),
                        f: Vec::new(),
                        g: Vec::new(),
                    }),
                    other => {
                        return Err(ParseError::Syntax {
                            line,
                            col: tokens[0].col,
                            msg: format!("unknown block kind {other:?}"),
                        })
                    }
                });
            }
            Some(current) => {
                if tokens[0].text == "}" {
                    if tokens.len() != 1 {
                        return Err(ParseError::Syntax {
                            line,
                            col: tokens[1].col,
                            msg: "unexpected tokens after `}`".to_string(),
                        });
                    }
                    match block.take().expect("inside a block") {
                        Block::Frame(f) => finish_frame(f, line, &mut doc)?,
                        Block::System(s) => finish_system(s, line, &mut doc)?,
                        Block::Object(o) => finish_object(o, line, &mut doc)?,
                        Block::Morphism(m) => finish_morphism(m, line, &mut doc)?,
                    }
                    continue;
                }
                fact_line(current, &tokens, line)?;
            }
        }
    }

    if block.is_some() {
        return Err(ParseError::Syntax {
            line: content.lines().count(),
            col: 1,
            msg: "unterminated block (missing `}`)".to_string(),
        });
    }
    Ok(doc)
}

fn fact_line(block: &mut Block, tokens: &[Token<'_>], line: usize) -> Result<(), ParseError> {
    let key = tokens[0].text;
    let args = &tokens[1..];
    let syntax = |col: usize, msg: String| ParseError::Syntax { line, col, msg };

    match block {
        Block::Frame(frame) => match key {
            "elements" => {
                if args.is_empty() {
                    return Err(syntax(tokens[0].col, "`elements` needs at least one name".into()));
                }
                frame.elements.extend(args.iter().map(|t| t.text.to_string()));
            }
            "leq" => {
                if args.len() != 2 {
                    return Err(syntax(tokens[0].col, "`leq` takes two element names".into()));
                }
                frame.leq.push((args[0].text.to_string(), args[1].text.to_string()));
            }
            other => return Err(syntax(tokens[0].col, format!("unknown frame fact {other:?}"))),
        },
        Block::System(system) => match key {
            "frame" => {
                if args.len() != 1 {
                    return Err(syntax(tokens[0].col, "`frame` takes one name".into()));
                }
                system.frame = args[0].text.to_string();
            }
            "points" => {
                if args.is_empty() {
                    return Err(syntax(tokens[0].col, "`points` needs at least one name".into()));
                }
                system.points.extend(args.iter().map(|t| t.text.to_string()));
            }
            "alpha" => {
                let (point, open, degree) = alpha_fact(args, line, tokens[0].col)?;
                system.alpha.push((point, open, degree));
            }
            other => return Err(syntax(tokens[0].col, format!("unknown system fact {other:?}"))),
        },
        Block::Object(object) => match key {
            "points" => {
                if args.is_empty() {
                    return Err(syntax(tokens[0].col, "`points` needs at least one name".into()));
                }
                object.points.extend(args.iter().map(|t| t.text.to_string()));
            }
            "opens" => {
                if args.is_empty() {
                    return Err(syntax(tokens[0].col, "`opens` needs at least one name".into()));
                }
                object.opens.extend(args.iter().map(|t| t.text.to_string()));
            }
            "alpha" => {
                let (point, open, degree) = alpha_fact(args, line, tokens[0].col)?;
                object.alpha.push((point, open, degree));
            }
            other => return Err(syntax(tokens[0].col, format!("unknown object fact {other:?}"))),
        },
        Block::Morphism(morphism) => match key {
            "source" | "target" => {
                if args.len() != 1 {
                    return Err(syntax(tokens[0].col, format!("`{key}` takes one name")));
                }
                if key == "source" {
                    morphism.source = args[0].text.to_string();
                } else {
                    morphism.target = args[0].text.to_string();
                }
            }
            "f" | "g" => {
                if args.len() != 2 {
                    return Err(syntax(tokens[0].col, format!("`{key}` takes two names")));
                }
                let pair = (args[0].text.to_string(), args[1].text.to_string());
                if key == "f" {
                    morphism.f.push(pair);
                } else {
                    morphism.g.push(pair);
                }
            }
            other => {
                return Err(syntax(tokens[0].col, format!("unknown morphism fact {other:?}")))
            }
        },
    }
    Ok(())
}

fn alpha_fact(
    args: &[Token<'_>],
    line: usize,
    key_col: usize,
) -> Result<(String, String, Degree), ParseError> {
    if args.len() != 3 {
        return Err(ParseError::Syntax {
            line,
            col: key_col,
            msg: "`alpha` takes `<point> <open> <degree>`".to_string(),
        });
    }
    let degree: Degree = args[2].text.parse().map_err(|_| ParseError::InvalidDegree {
        line,
        col: args[2].col,
        text: args[2].text.to_string(),
    })?;
    Ok((args[0].text.to_string(), args[1].text.to_string(), degree))
}

fn finish_frame(frame: DocFrame, line: usize, doc: &mut WorkspaceDoc) -> Result<(), ParseError> {
    if frame.elements.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: 1,
            msg: format!("frame {:?} has no elements", frame.name),
        });
    }
    doc.frames.push(frame);
    Ok(())
}

fn finish_system(system: DocSystem, line: usize, doc: &mut WorkspaceDoc) -> Result<(), ParseError> {
    if system.frame.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: 1,
            msg: format!("system {:?} names no frame", system.name),
        });
    }
    if system.points.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: 1,
            msg: format!("system {:?} has no points", system.name),
        });
    }
    doc.systems.push(system);
    Ok(())
}

fn finish_object(object: DocObject, line: usize, doc: &mut WorkspaceDoc) -> Result<(), ParseError> {
    if object.points.is_empty() || object.opens.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: 1,
            msg: format!("object {:?} needs points and opens", object.name),
        });
    }
    doc.objects.push(object);
    Ok(())
}

fn finish_morphism(
    morphism: DocMorphism,
    line: usize,
    doc: &mut WorkspaceDoc,
) -> Result<(), ParseError> {
    if morphism.source.is_empty() || morphism.target.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: 1,
            msg: format!("morphism {:?} needs source and target", morphism.name),
        });
    }
    doc.morphisms.push(morphism);
    Ok(())
}
