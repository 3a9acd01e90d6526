//! C ABI over `labyrinth`.
//!
//! Patterns and sequences are opaque handles owned by the caller and
//! released with their `_free` function. Every call returns a [`LabStatus`];
//! on failure [`lab_last_error`] describes the error for the calling thread.
//! Strings returned through `char **` are released with [`lab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use labyrinth::{
    build_level, matrix_product, path_matrix, render_svg, validate, Budget, Error,
    LabyrinthSequence, Pattern, RenderSpec, Tail,
};

pub const LAB_TAIL_FINITE: u32 = 0;
pub const LAB_TAIL_REPEAT_LAST: u32 = 1;
pub const LAB_TAIL_CYCLE: u32 = 2;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Io = 3,
    Invalid = 4,
    NotLabyrinth = 5,
    Budget = 6,
    Overflow = 7,
    Panic = 8,
}

pub struct LabPattern {
    inner: Pattern,
}

pub struct LabSequence {
    patterns: Vec<Pattern>,
    tail: Tail,
}

impl LabSequence {
    fn sequence(&self) -> Result<LabyrinthSequence, Failure> {
        Ok(LabyrinthSequence::new(self.patterns.clone(), self.tail)?)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LabValidation {
    pub property1: bool,
    pub property2: bool,
    pub property3: bool,
    pub wild_property1: bool,
    pub wild_property2: bool,
    pub is_labyrinth: bool,
    pub is_wild_labyrinth: bool,
    pub horizontally_blocked: bool,
    pub vertically_blocked: bool,
    pub vertical_pairs: usize,
    pub horizontal_pairs: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure {
    status: LabStatus,
    message: String,
}

impl Failure {
    fn new(status: LabStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::Manifest { .. } | Error::NoWhiteCells => LabStatus::Parse,
            Error::Io { .. } => LabStatus::Io,
            Error::NotLabyrinth { .. } => LabStatus::NotLabyrinth,
            Error::BudgetExceeded { .. } | Error::RenderBudget { .. } => LabStatus::Budget,
            _ => LabStatus::Invalid,
        };
        Failure::new(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            LabStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(&e.message);
            e.status
        }
        Err(_) => {
            set_last_error("internal panic");
            LabStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure::new(LabStatus::NullPointer, "null pointer argument")
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::new(LabStatus::Parse, "argument is not valid UTF-8"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(null)
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

fn string_out(s: String, out: &mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::new(LabStatus::Invalid, "nul in output"))?;
    *out = c.into_raw();
    Ok(())
}

fn boxed<T>(v: T, out: &mut *mut T) {
    *out = Box::into_raw(Box::new(v));
}

fn budget(cells: u64) -> Budget {
    if cells == 0 {
        Budget::default()
    } else {
        Budget::cells(cells)
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn lab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses pattern text.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_parse(text: *const c_char, out: *mut *mut LabPattern) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let p = labyrinth::parse_pattern(str_arg(text)?)?;
        boxed(LabPattern { inner: p }, out);
        Ok(())
    })
}

/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_load(path: *const c_char, out: *mut *mut LabPattern) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let p = Pattern::load(str_arg(path)?)?;
        boxed(LabPattern { inner: p }, out);
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_free(p: *mut LabPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_size(p: *const LabPattern, m: *mut usize, s: *mut usize) -> LabStatus {
    guard(|| {
        let p = &ref_arg(p)?.inner;
        *out_arg(m)? = p.m();
        *out_arg(s)? = p.s();
        Ok(())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_validate(p: *const LabPattern, out: *mut LabValidation) -> LabStatus {
    guard(|| {
        let r = validate(&ref_arg(p)?.inner);
        *out_arg(out)? = LabValidation {
            property1: r.property1,
            property2: r.property2,
            property3: r.property3,
            wild_property1: r.wild_property1,
            wild_property2: r.wild_property2,
            is_labyrinth: r.is_labyrinth,
            is_wild_labyrinth: r.is_wild_labyrinth,
            horizontally_blocked: r.horizontally_blocked,
            vertically_blocked: r.vertically_blocked,
            vertical_pairs: r.exits.vertical_pairs.len(),
            horizontal_pairs: r.exits.horizontal_pairs.len(),
        };
        Ok(())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_complement(p: *const LabPattern, out: *mut *mut LabPattern) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let c = ref_arg(p)?.inner.complement()?;
        boxed(LabPattern { inner: c }, out);
        Ok(())
    })
}

/// Pattern text in the file format.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_to_text(p: *const LabPattern, out: *mut *mut c_char) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        string_out(ref_arg(p)?.inner.to_text(), out)
    })
}

/// The path matrix, row-major with rows and columns `A..F`.
///
/// # Safety
/// `out` must point to 36 writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_path_matrix(p: *const LabPattern, out: *mut u64) -> LabStatus {
    guard(|| {
        let m = path_matrix(&ref_arg(p)?.inner)?;
        if out.is_null() {
            return Err(null());
        }
        let rows = m.to_u64().ok_or_else(|| Failure::new(LabStatus::Overflow, "entry exceeds 64 bits"))?;
        let dst = std::slice::from_raw_parts_mut(out, 36);
        for (k, v) in rows.iter().flatten().enumerate() {
            dst[k] = *v;
        }
        Ok(())
    })
}

/// SVG rendering with default colors.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_pattern_render_svg(
    p: *const LabPattern,
    cell_pixels: u32,
    out: *mut *mut c_char,
) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let svg = render_svg(&ref_arg(p)?.inner, &RenderSpec::with_cell_pixels(cell_pixels))?;
        string_out(svg, out)
    })
}

/// An empty sequence with one of the `LAB_TAIL_*` tails.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_new(tail: u32, out: *mut *mut LabSequence) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let tail = match tail {
            LAB_TAIL_FINITE => Tail::Finite,
            LAB_TAIL_REPEAT_LAST => Tail::RepeatLast,
            LAB_TAIL_CYCLE => Tail::Cycle,
            t => return Err(Failure::new(LabStatus::Invalid, format!("unknown tail {t}"))),
        };
        boxed(
            LabSequence {
                patterns: Vec::new(),
                tail,
            },
            out,
        );
        Ok(())
    })
}

/// Appends a copy of `p`.
///
/// # Safety
/// Both handles must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_push(seq: *mut LabSequence, p: *const LabPattern) -> LabStatus {
    guard(|| {
        let p = ref_arg(p)?.inner.clone();
        out_arg(seq)?.patterns.push(p);
        Ok(())
    })
}

/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_load(path: *const c_char, out: *mut *mut LabSequence) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let s = LabyrinthSequence::load_manifest(str_arg(path)?)?;
        boxed(
            LabSequence {
                patterns: s.patterns().to_vec(),
                tail: s.tail(),
            },
            out,
        );
        Ok(())
    })
}

/// # Safety
/// `seq` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_free(seq: *mut LabSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// The level set `W_n` as a pattern. A zero budget selects the default.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_build_level(
    seq: *const LabSequence,
    n: usize,
    budget_cells: u64,
    out: *mut *mut LabPattern,
) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let s = ref_arg(seq)?.sequence()?;
        let w = build_level(&s, n, budget(budget_cells))?;
        boxed(LabPattern { inner: w.into_pattern() }, out);
        Ok(())
    })
}

/// `M(n)` as six lines of decimals.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_matrix_text(
    seq: *const LabSequence,
    n: usize,
    out: *mut *mut c_char,
) -> LabStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let s = ref_arg(seq)?.sequence()?;
        string_out(matrix_product(&s, n)?.to_text(), out)
    })
}

/// Path lengths `A(n)..F(n)`; `LAB_STATUS_OVERFLOW` if one exceeds 64 bits.
///
/// # Safety
/// `out` must point to 6 writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn lab_sequence_lengths(seq: *const LabSequence, n: usize, out: *mut u64) -> LabStatus {
    guard(|| {
        let s = ref_arg(seq)?.sequence()?;
        let lengths = matrix_product(&s, n)?.path_lengths();
        if out.is_null() {
            return Err(null());
        }
        let dst = std::slice::from_raw_parts_mut(out, 6);
        for (d, l) in dst.iter_mut().zip(&lengths) {
            *d = u64::try_from(l)
                .map_err(|_| Failure::new(LabStatus::Overflow, format!("length {l} exceeds 64 bits")))?;
        }
        Ok(())
    })
}
