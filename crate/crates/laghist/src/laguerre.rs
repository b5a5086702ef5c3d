//! Laguerre histories: 3-Motzkin step words over {U, D, LA, LB, LC} together
//! with height-bounded labels (ξ, η). There are exactly n! histories of
//! length n, which is what makes them a codec target for permutations.
//!
//! Validity is enforced at construction, so every `LaguerreHistory` value in
//! circulation satisfies the height condition and the label ranges.

use std::fmt;

/// One step of a 3-Motzkin word: up, down, or one of three level kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    U,
    D,
    La,
    Lb,
    Lc,
}

impl StepKind {
    /// Height change contributed by the step.
    pub fn delta(self) -> i64 {
        match self {
            StepKind::U => 1,
            StepKind::D => -1,
            StepKind::La | StepKind::Lb | StepKind::Lc => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::U => "U",
            StepKind::D => "D",
            StepKind::La => "LA",
            StepKind::Lb => "LB",
            StepKind::Lc => "LC",
        }
    }

    pub fn parse(token: &str) -> Option<StepKind> {
        match token {
            "U" => Some(StepKind::U),
            "D" => Some(StepKind::D),
            "LA" => Some(StepKind::La),
            "LB" => Some(StepKind::Lb),
            "LC" => Some(StepKind::Lc),
            _ => None,
        }
    }
}

/// A label pair (ξ, η); `None` is the absent marker, kept distinct from
/// every integer so range violations are unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label {
    pub xi: Option<usize>,
    pub eta: Option<usize>,
}

impl Label {
    pub const fn new(xi: Option<usize>, eta: Option<usize>) -> Self {
        Label { xi, eta }
    }

    pub const fn absent() -> Self {
        Label { xi: None, eta: None }
    }
}

/// Which constraint a candidate history violates, and where (1-based step).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HistoryViolation {
    /// Steps and labels have different lengths.
    LengthMismatch { steps: usize, labels: usize },
    /// Height would become negative after this step.
    HeightNegative { index: usize },
    /// Final height is not zero.
    FinalHeightNonzero { height: i64 },
    /// A label field is present where the step kind forbids one.
    LabelForbidden { index: usize, field: LabelField },
    /// A label field is absent where the step kind requires one.
    LabelMissing { index: usize, field: LabelField },
    /// A label value is outside its allowed range for the step kind.
    LabelOutOfRange { index: usize, field: LabelField, value: usize, expected_max: usize },
    /// An LC step whose η is not exactly height-before + 1.
    LcEtaMismatch { index: usize, value: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelField {
    Xi,
    Eta,
}

impl fmt::Display for HistoryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HistoryViolation::LengthMismatch { steps, labels } => {
                write!(f, "{steps} steps but {labels} labels")
            }
            HistoryViolation::HeightNegative { index } => {
                write!(f, "height becomes negative after step {index}")
            }
            HistoryViolation::FinalHeightNonzero { height } => {
                write!(f, "final height is {height}, expected 0")
            }
            HistoryViolation::LabelForbidden { index, field } => {
                write!(f, "step {index}: {field:?} must be absent for this step kind")
            }
            HistoryViolation::LabelMissing { index, field } => {
                write!(f, "step {index}: {field:?} is required for this step kind")
            }
            HistoryViolation::LabelOutOfRange { index, field, value, expected_max } => {
                write!(f, "step {index}: {field:?}={value} outside 1..={expected_max}")
            }
            HistoryViolation::LcEtaMismatch { index, value, expected } => {
                write!(f, "step {index}: LC requires eta={expected}, found {value}")
            }
        }
    }
}

impl std::error::Error for HistoryViolation {}

/// Error parsing the history text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HistoryParseError {
    MissingLength,
    BadLength { token: String },
    MissingLine { line: usize },
    BadLine { line: usize, reason: String },
    TrailingContent { line: usize },
    Invalid(HistoryViolation),
}

impl fmt::Display for HistoryParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HistoryParseError::MissingLength => write!(f, "missing leading length line"),
            HistoryParseError::BadLength { token } => {
                write!(f, "length line {token:?} is not a nonnegative integer")
            }
            HistoryParseError::MissingLine { line } => write!(f, "missing step line {line}"),
            HistoryParseError::BadLine { line, reason } => {
                write!(f, "step line {line}: {reason}")
            }
            HistoryParseError::TrailingContent { line } => {
                write!(f, "unexpected content after the last step, line {line}")
            }
            HistoryParseError::Invalid(v) => write!(f, "invalid history: {v}"),
        }
    }
}

impl std::error::Error for HistoryParseError {}

/// A validated Laguerre history.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaguerreHistory {
    steps: Vec<StepKind>,
    labels: Vec<Label>,
}

impl LaguerreHistory {
    /// Validates a candidate and wraps it. Reports the first violated
    /// constraint and its step index.
    pub fn new(steps: Vec<StepKind>, labels: Vec<Label>) -> Result<Self, HistoryViolation> {
        Self::validate_parts(&steps, &labels)?;
        Ok(LaguerreHistory { steps, labels })
    }

    /// The empty history (n = 0).
    pub fn empty() -> Self {
        LaguerreHistory { steps: Vec::new(), labels: Vec::new() }
    }

    /// Checks the height condition and all per-step label constraints:
    /// U carries (Δ,Δ); D carries ξ,η ∈ 1..=h; LA carries (ξ∈1..=h, Δ);
    /// LB carries (Δ, η∈1..=h); LC carries (Δ, h+1), where h is the height
    /// before the step.
    pub fn validate_parts(steps: &[StepKind], labels: &[Label]) -> Result<(), HistoryViolation> {
        if steps.len() != labels.len() {
            return Err(HistoryViolation::LengthMismatch {
                steps: steps.len(),
                labels: labels.len(),
            });
        }
        let mut h: i64 = 0;
        for (idx0, (&step, &label)) in steps.iter().zip(labels).enumerate() {
            let index = idx0 + 1;
            let h_before = h;
            h += step.delta();
            if h < 0 {
                return Err(HistoryViolation::HeightNegative { index });
            }
            let bound = h_before as usize;
            match step {
                StepKind::U => {
                    require_absent(index, LabelField::Xi, label.xi)?;
                    require_absent(index, LabelField::Eta, label.eta)?;
                }
                StepKind::D => {
                    require_in_range(index, LabelField::Xi, label.xi, bound)?;
                    require_in_range(index, LabelField::Eta, label.eta, bound)?;
                }
                StepKind::La => {
                    require_in_range(index, LabelField::Xi, label.xi, bound)?;
                    require_absent(index, LabelField::Eta, label.eta)?;
                }
                StepKind::Lb => {
                    require_absent(index, LabelField::Xi, label.xi)?;
                    require_in_range(index, LabelField::Eta, label.eta, bound)?;
                }
                StepKind::Lc => {
                    require_absent(index, LabelField::Xi, label.xi)?;
                    match label.eta {
                        None => {
                            return Err(HistoryViolation::LabelMissing {
                                index,
                                field: LabelField::Eta,
                            })
                        }
                        Some(value) if value != bound + 1 => {
                            return Err(HistoryViolation::LcEtaMismatch {
                                index,
                                value,
                                expected: bound + 1,
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        if h != 0 {
            return Err(HistoryViolation::FinalHeightNonzero { height: h });
        }
        Ok(())
    }

    /// Re-checks the invariants (always Ok for a constructed value; used by
    /// tests to certify outputs of the codec and the label rewriting maps).
    pub fn validate(&self) -> Result<(), HistoryViolation> {
        Self::validate_parts(&self.steps, &self.labels)
    }

    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[StepKind] {
        &self.steps
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Step kind at 1-based index.
    pub fn step(&self, i: usize) -> StepKind {
        self.steps[i - 1]
    }

    /// Label at 1-based index.
    pub fn label(&self, i: usize) -> Label {
        self.labels[i - 1]
    }

    /// Heights h_0..h_n; h_0 = 0, U adds one, D removes one, levels keep.
    pub fn heights(&self) -> Vec<usize> {
        let mut hs = Vec::with_capacity(self.n() + 1);
        let mut h: i64 = 0;
        hs.push(0);
        for &s in &self.steps {
            h += s.delta();
            hs.push(h as usize);
        }
        hs
    }

    /// Parses the text format: first line the length n, then n lines
    /// "i KIND xi eta" with absent fields written "-".
    pub fn parse(text: &str) -> Result<Self, HistoryParseError> {
        let mut lines = text.lines();
        let first = lines.next().ok_or(HistoryParseError::MissingLength)?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| HistoryParseError::BadLength { token: first.trim().to_string() })?;
        let mut steps = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for i in 1..=n {
            let line = lines.next().ok_or(HistoryParseError::MissingLine { line: i + 1 })?;
            let (step, label) = parse_step_line(line, i)
                .map_err(|reason| HistoryParseError::BadLine { line: i + 1, reason })?;
            steps.push(step);
            labels.push(label);
        }
        for (extra, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(HistoryParseError::TrailingContent { line: n + 2 + extra });
            }
        }
        LaguerreHistory::new(steps, labels).map_err(HistoryParseError::Invalid)
    }
}

fn require_absent(
    index: usize,
    field: LabelField,
    value: Option<usize>,
) -> Result<(), HistoryViolation> {
    match value {
        None => Ok(()),
        Some(_) => Err(HistoryViolation::LabelForbidden { index, field }),
    }
}

fn require_in_range(
    index: usize,
    field: LabelField,
    value: Option<usize>,
    max: usize,
) -> Result<(), HistoryViolation> {
    match value {
        None => Err(HistoryViolation::LabelMissing { index, field }),
        Some(v) if v >= 1 && v <= max => Ok(()),
        Some(v) => Err(HistoryViolation::LabelOutOfRange { index, field, value: v, expected_max: max }),
    }
}

fn parse_step_line(line: &str, expected_index: usize) -> Result<(StepKind, Label), String> {
    let mut parts = line.split_whitespace();
    let idx_token = parts.next().ok_or("empty line")?;
    let idx: usize = idx_token
        .parse()
        .map_err(|_| format!("index {idx_token:?} is not an integer"))?;
    if idx != expected_index {
        return Err(format!("index {idx}, expected {expected_index}"));
    }
    let kind_token = parts.next().ok_or("missing step kind")?;
    let kind = StepKind::parse(kind_token)
        .ok_or_else(|| format!("unknown step kind {kind_token:?}"))?;
    let xi = parse_label_field(parts.next().ok_or("missing xi field")?)?;
    let eta = parse_label_field(parts.next().ok_or("missing eta field")?)?;
    if let Some(extra) = parts.next() {
        return Err(format!("unexpected trailing token {extra:?}"));
    }
    Ok((kind, Label::new(xi, eta)))
}

fn parse_label_field(token: &str) -> Result<Option<usize>, String> {
    if token == "-" {
        return Ok(None);
    }
    token
        .parse::<usize>()
        .map(Some)
        .map_err(|_| format!("label field {token:?} is neither '-' nor an integer"))
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for i in 1..=self.n() {
            let label = self.label(i);
            write!(f, "{} {} {} {}", i, self.step(i).as_str(), field(label.xi), field(label.eta))?;
            if i < self.n() {
                writeln!(f)?;
            }
        }
        return Ok(());

        fn field(v: Option<usize>) -> String {
            match v {
                None => "-".to_string(),
                Some(k) => k.to_string(),
            }
        }
    }
}

impl fmt::Debug for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaguerreHistory[")?;
        for i in 1..=self.n() {
            if i > 1 {
                write!(f, " ")?;
            }
            let l = self.label(i);
            write!(
                f,
                "{}({},{})",
                self.step(i).as_str(),
                l.xi.map_or("-".to_string(), |v| v.to_string()),
                l.eta.map_or("-".to_string(), |v| v.to_string()),
            )?;
        }
        write!(f, "]")
    }
}

/// The set-valued statistics readable from a history: antirecord positions,
/// exclusive record letters/positions, excedance positions/letters,
/// record-antirecords, and cycle maxima of the decoded permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoryProfile {
    pub arecp: Vec<usize>,
    pub erecl: Vec<usize>,
    pub erecp: Vec<usize>,
    pub excp: Vec<usize>,
    pub excl: Vec<usize>,
    pub rar: Vec<usize>,
    pub cyc: Vec<usize>,
}

/// Reads the statistics directly off the steps and labels where possible
/// (antirecords: D/LB/LC with η=1; exclusive record letters: D/LA with ξ=1;
/// excedance positions: U/LA; excedance letters: D/LA; record-antirecords:
/// LC with η=1), and reconstructs the two graph-dependent sets — exclusive
/// record positions and cycle maxima — through a decode pass.
pub fn history_profile(h: &LaguerreHistory) -> HistoryProfile {
    let n = h.n();
    let mut arecp = Vec::new();
    let mut erecl = Vec::new();
    let mut excp = Vec::new();
    let mut excl = Vec::new();
    let mut rar = Vec::new();
    for i in 1..=n {
        let step = h.step(i);
        let label = h.label(i);
        if matches!(step, StepKind::D | StepKind::Lb | StepKind::Lc) && label.eta == Some(1) {
            arecp.push(i);
        }
        if matches!(step, StepKind::D | StepKind::La) && label.xi == Some(1) {
            erecl.push(i);
        }
        if matches!(step, StepKind::U | StepKind::La) {
            excp.push(i);
        }
        if matches!(step, StepKind::D | StepKind::La) {
            excl.push(i);
        }
        if step == StepKind::Lc && label.eta == Some(1) {
            rar.push(i);
        }
    }
    let (perm, cyc) = crate::theta::decode_with_cycle_maxima(h);
    let erecp: Vec<usize> = {
        let inv = perm.inverse();
        let mut v: Vec<usize> = erecl.iter().map(|&j| inv.image(j)).collect();
        v.sort_unstable();
        v
    };
    HistoryProfile { arecp, erecl, erecp, excp, excl, rar, cyc }
}

/// All valid 3-Motzkin step words of length n, in lexicographic order of
/// the kind sequence (U < D < LA < LB < LC).
pub fn step_words(n: usize) -> Vec<Vec<StepKind>> {
    const ORDER: [StepKind; 5] = [StepKind::U, StepKind::D, StepKind::La, StepKind::Lb, StepKind::Lc];
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(
        word: &mut Vec<StepKind>,
        h: usize,
        remaining: usize,
        order: &[StepKind; 5],
        out: &mut Vec<Vec<StepKind>>,
    ) {
        if remaining == 0 {
            if h == 0 {
                out.push(word.clone());
            }
            return;
        }
        if h > remaining {
            return; // cannot come back down to zero
        }
        for &s in order {
            let delta = s.delta();
            if delta < 0 && h == 0 {
                continue;
            }
            word.push(s);
            go(word, (h as i64 + delta) as usize, remaining - 1, order, out);
            word.pop();
        }
    }
    go(&mut word, 0, n, &ORDER, &mut out);
    out
}

/// Invokes `f` on every labeling of a fixed step word, sweeping the label
/// choices like an odometer (ξ fastest). The number of calls is the product
/// over steps of the per-step choice count: 1 for U and LC, h for LA and LB,
/// h² for D, where h is the height before the step.
pub fn for_each_labeling(word: &[StepKind], mut f: impl FnMut(&LaguerreHistory)) {
    let n = word.len();
    // per-position choice counts for (xi, eta); 0 encodes "absent"
    let mut xi_max = vec![0usize; n];
    let mut eta_max = vec![0usize; n];
    let mut lc_eta = vec![0usize; n];
    let mut h = 0usize;
    for (idx, &s) in word.iter().enumerate() {
        match s {
            StepKind::U => {}
            StepKind::D => {
                xi_max[idx] = h;
                eta_max[idx] = h;
            }
            StepKind::La => xi_max[idx] = h,
            StepKind::Lb => eta_max[idx] = h,
            StepKind::Lc => lc_eta[idx] = h + 1,
        }
        // a level step at height 0 needs a label from an empty range, so the
        // word supports no labelings at all
        if matches!(s, StepKind::D | StepKind::La | StepKind::Lb) && h == 0 {
            return;
        }
        h = (h as i64 + s.delta()) as usize;
    }
    let mut xi = vec![1usize; n];
    let mut eta = vec![1usize; n];
    loop {
        let labels: Vec<Label> = (0..n)
            .map(|idx| {
                let x = if xi_max[idx] > 0 { Some(xi[idx]) } else { None };
                let e = if eta_max[idx] > 0 {
                    Some(eta[idx])
                } else if lc_eta[idx] > 0 {
                    Some(lc_eta[idx])
                } else {
                    None
                };
                Label::new(x, e)
            })
            .collect();
        let history = LaguerreHistory::new(word.to_vec(), labels)
            .expect("odometer stays inside the per-step label ranges");
        f(&history);

        // advance the odometer
        let mut idx = 0;
        loop {
            if idx == n {
                return;
            }
            if xi_max[idx] > 0 && xi[idx] < xi_max[idx] {
                xi[idx] += 1;
                break;
            }
            xi[idx] = 1;
            if eta_max[idx] > 0 && eta[idx] < eta_max[idx] {
                eta[idx] += 1;
                break;
            }
            eta[idx] = 1;
            idx += 1;
        }
    }
}

/// All Laguerre histories of length n. Intended for small n; the count is n!.
pub fn enumerate(n: usize) -> Vec<LaguerreHistory> {
    let mut out = Vec::new();
    for word in step_words(n) {
        for_each_labeling(&word, |h| out.push(h.clone()));
    }
    out
}

/// Counts histories of length n by exhaustive generation.
pub fn count(n: usize) -> u64 {
    let mut total = 0u64;
    for word in step_words(n) {
        for_each_labeling(&word, |_| total += 1);
    }
    total
}
