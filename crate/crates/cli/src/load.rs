//! Reading input files into core structures. Every failure becomes an [`InputError`].

use std::path::{Path, PathBuf};

use framekit::frame::{Frame, FrameError};
use framekit::poset::{parse_poset, FinitePoset};
use framekit::refine::{parse_frmmap, FrameMorphism};
use framekit::stone::{parse_space, FiniteSpace};
use framekit::text::ParseError;
use framekit::ttg::{parse_support, parse_ttg, SupportDatum, TTPresentation, TtgError};

use crate::report::InputError;

/// The file name alone, so reports do not depend on the working directory.
pub fn display_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError::new("Io", format!("cannot read {}: {e}", path.display())).in_file(display_name(path)))
}

fn parse_error(e: ParseError, path: &Path) -> InputError {
    let mut err = InputError::new(e.kind, e.message).in_file(display_name(path));
    err.line = Some(e.line);
    err
}

pub fn frame_error(e: &FrameError) -> InputError {
    let kind = match e {
        FrameError::Poset(p) => p.kind(),
        FrameError::InvalidArity(_) => "InvalidArity",
        FrameError::NoBottom => "NoBottom",
        FrameError::NotCoherent { .. } => "NotCoherent",
        FrameError::RoundTripFailure(_) => "RoundTripFailure",
        FrameError::AdjunctionFailure(_) => "AdjunctionFailure",
        FrameError::AscentFailure(_) => "AscentFailure",
        FrameError::ArityOrder(..) => "ArityOrder",
    };
    InputError::new(kind, e.to_string())
}

pub fn ttg_error(e: &TtgError) -> InputError {
    let kind = match e {
        TtgError::UnknownObject(_) => "UnknownObject",
        TtgError::ValidationFailure(_) => "ValidationFailure",
        TtgError::FrameFailure(_) => "FrameFailure",
        TtgError::LemmaFailure(_) => "LemmaFailure",
        TtgError::NotWellDefined(..) => "NotWellDefined",
        TtgError::NotUnique(_) => "NotUnique",
        TtgError::NotAMorphism(_) => "NotAMorphism",
        TtgError::SupportInvalid(_) => "SupportInvalid",
        TtgError::HypothesisViolated(_) => "HypothesisViolated",
        TtgError::AdjunctionFailure(_) => "AdjunctionFailure",
        TtgError::NotAnIdeal(_) => "NotAnIdeal",
        TtgError::Frame(f) => return frame_error(f),
    };
    InputError::new(kind, e.to_string())
}

pub fn poset(path: &Path) -> Result<FinitePoset, InputError> {
    parse_poset(&read(path)?).map_err(|e| parse_error(e, path))
}

/// A poset file that must describe a frame (a bounded distributive lattice).
pub fn frame(path: &Path) -> Result<Frame, InputError> {
    Frame::from_poset(&poset(path)?).map_err(|e| frame_error(&e).in_file(display_name(path)))
}

pub fn space(path: &Path) -> Result<FiniteSpace, InputError> {
    parse_space(&read(path)?).map_err(|e| parse_error(e, path))
}

fn sibling(of: &Path, name: &str) -> PathBuf {
    of.parent().unwrap_or(Path::new("")).join(name)
}

/// A `.frmmap` file; its `source` and `target` paths are relative to the file itself.
pub fn morphism(path: &Path) -> Result<FrameMorphism, InputError> {
    let file = parse_frmmap(&read(path)?).map_err(|e| parse_error(e, path))?;
    let source = frame(&sibling(path, &file.source))?;
    let target = frame(&sibling(path, &file.target))?;
    FrameMorphism::from_names(source, target, &file.pairs)
        .map_err(|e| InputError::new("NotAMorphism", e.to_string()).in_file(display_name(path)))
}

pub fn presentation(path: &Path) -> Result<TTPresentation, InputError> {
    let data = parse_ttg(&read(path)?).map_err(|e| parse_error(e, path))?;
    TTPresentation::new(data).map_err(|e| ttg_error(&e).in_file(display_name(path)))
}

/// A support datum file; its `frame` path is relative to the file itself.
pub fn support(path: &Path, t: &TTPresentation) -> Result<SupportDatum, InputError> {
    let file = parse_support(&read(path)?).map_err(|e| parse_error(e, path))?;
    let f = frame(&sibling(path, &file.frame))?;
    SupportDatum::from_names(t, f, &file.sigma).map_err(|e| ttg_error(&e).in_file(display_name(path)))
}
