//! The even-cohomology skeleton of a smooth projective threefold and its
//! behaviour under iterated blowups at points and smooth curves.
//!
//! A [`ThreefoldModel`] stores an ordered divisor basis (H², named), an
//! ordered curve basis (H⁴, named), the cup-product table divisor ×
//! divisor → curve class, the pairing divisor × curve → ℚ, the Chern
//! classes c₁ (divisor) and c₂ (curve), and a provenance list recording
//! each blowup. All coefficients are exact rationals.
//!
//! Blowup product rules, with π the blowdown, E/F the exceptional
//! divisor, l/f the new curve generator and C the curve center of class
//! γ = c₁·C + 2g − 2:
//!
//! point:  π*a·π*b = π*(a·b),  π*a·E = 0,  E·E = −l,
//!         π*a·l = 0,  E·π*z = 0,  E·l = −1,
//!         c₁ ← π*c₁ − 2E,  c₂ ← π*c₂.
//!
//! curve:  π*a·π*b = π*(a·b),  π*a·F = (a·C)·f,  F·F = −π*C + γ·f,
//!         π*a·f = 0,  F·π*z = 0,  F·f = −1,
//!         c₁ ← π*c₁ − F,  c₂ ← π*c₂ + π*C − (c₁·C)·f.
//!
//! These rules make the triple product symmetric, give π_*(F) = 0,
//! π_*(F²) = −C, F³ = −γ (point case: F³ = 1) and keep c₁·c₂ invariant
//! under blowdown.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rat::{self, Rat};

#[derive(Debug, Error)]
pub enum ChowError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("a degree-6 product needs three divisors, or one divisor and one curve")]
    WrongDegree,
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("non-integral value {value} for {what}")]
    NonIntegral { what: String, value: Rat },
    #[error("tau = {tau} violates parity: gamma = {gamma} requires tau ≡ gamma (mod 2)")]
    TauParity { tau: i64, gamma: i64 },
    #[error("tau = {0} must be ≤ 0")]
    TauPositive(i64),
    #[error("blowup record {0} is not a curve blowup")]
    NotCurveBlowup(usize),
    #[error("no blowup record at index {0}")]
    NoSuchBlowup(usize),
}

macro_rules! impl_class {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            coeffs: Vec<Rat>,
        }

        impl $name {
            pub fn new(coeffs: Vec<Rat>) -> Self {
                Self { coeffs }
            }

            pub fn zero(rank: usize) -> Self {
                Self {
                    coeffs: vec![Rat::zero(); rank],
                }
            }

            /// Basis vector `e_i` in a basis of the given rank.
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut c = Self::zero(rank);
                c.coeffs[i] = rat::int(1);
                c
            }

            pub fn rank(&self) -> usize {
                self.coeffs.len()
            }

            pub fn coeffs(&self) -> &[Rat] {
                &self.coeffs
            }

            pub fn coeff(&self, i: usize) -> &Rat {
                &self.coeffs[i]
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Rat::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank(), "class rank mismatch");
                Self {
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&other.coeffs)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank(), "class rank mismatch");
                Self {
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&other.coeffs)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }

            pub fn neg(&self) -> Self {
                Self {
                    coeffs: self.coeffs.iter().map(|a| -a).collect(),
                }
            }

            pub fn scale(&self, s: &Rat) -> Self {
                Self {
                    coeffs: self.coeffs.iter().map(|a| a * s).collect(),
                }
            }

            /// Extends the coordinate vector by one zero (the image under
            /// one pullback step).
            fn extended(&self) -> Self {
                let mut coeffs = self.coeffs.clone();
                coeffs.push(Rat::zero());
                Self { coeffs }
            }

            /// Drops the last coordinate (one pushforward step).
            fn truncated(&self) -> Self {
                let mut coeffs = self.coeffs.clone();
                coeffs.pop();
                Self { coeffs }
            }
        }
    };
}

impl_class!(DivisorClass);
impl_class!(CurveClass);

/// Data of a smooth curve to be blown up, given in the parent model.
///
/// `tau` is the self-intersection of the zero section of the exceptional
/// ruled surface (the degree of the normalized normal bundle). It is an
/// input, never computed: when present it must satisfy `tau ≤ 0` and
/// `tau ≡ gamma (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCenterSpec {
    pub class: CurveClass,
    pub genus: u32,
    pub decomposable: bool,
    pub tau: Option<i64>,
}

impl CurveCenterSpec {
    pub fn new(class: CurveClass, genus: u32, decomposable: bool, tau: Option<i64>) -> Self {
        Self {
            class,
            genus,
            decomposable,
            tau,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupKind {
    Point,
    Curve,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupRecord {
    Point {
        exceptional_index: usize,
        new_curve_index: usize,
    },
    Curve {
        exceptional_index: usize,
        new_curve_index: usize,
        center: CurveCenterSpec,
        gamma: i64,
    },
}

impl BlowupRecord {
    pub fn kind(&self) -> BlowupKind {
        match self {
            BlowupRecord::Point { .. } => BlowupKind::Point,
            BlowupRecord::Curve { .. } => BlowupKind::Curve,
        }
    }

    pub fn exceptional_index(&self) -> usize {
        match self {
            BlowupRecord::Point {
                exceptional_index, ..
            }
            | BlowupRecord::Curve {
                exceptional_index, ..
            } => *exceptional_index,
        }
    }

    pub fn new_curve_index(&self) -> usize {
        match self {
            BlowupRecord::Point {
                new_curve_index, ..
            }
            | BlowupRecord::Curve {
                new_curve_index, ..
            } => *new_curve_index,
        }
    }

    pub fn gamma(&self) -> Option<i64> {
        match self {
            BlowupRecord::Point { .. } => None,
            BlowupRecord::Curve { gamma, .. } => Some(*gamma),
        }
    }

    pub fn center(&self) -> Option<&CurveCenterSpec> {
        match self {
            BlowupRecord::Point { .. } => None,
            BlowupRecord::Curve { center, .. } => Some(center),
        }
    }
}

/// One factor of a degree-6 intersection product.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    Div(&'a DivisorClass),
    Curve(&'a CurveClass),
}

#[derive(Clone, Debug)]
pub struct ThreefoldModel {
    divisor_names: Vec<String>,
    curve_names: Vec<String>,
    /// pairing[d][c] = D_d · C_c ∈ ℚ.
    pairing: Vec<Vec<Rat>>,
    /// mult[a][b] = D_a · D_b as a curve class; symmetric.
    mult: Vec<Vec<CurveClass>>,
    c1: DivisorClass,
    c2: CurveClass,
    provenance: Vec<BlowupRecord>,
}

impl ThreefoldModel {
    /// Projective 3-space: divisor basis {H}, curve basis {L}, H·H = L,
    /// H·L = 1, c₁ = 4H, c₂ = 6L.
    pub fn p3() -> Self {
        ThreefoldModel {
            divisor_names: vec!["H".to_string()],
            curve_names: vec!["L".to_string()],
            pairing: vec![vec![rat::int(1)]],
            mult: vec![vec![CurveClass::new(vec![rat::int(1)])]],
            c1: DivisorClass::new(vec![rat::int(4)]),
            c2: CurveClass::new(vec![rat::int(6)]),
            provenance: Vec::new(),
        }
    }

    pub fn divisor_rank(&self) -> usize {
        self.divisor_names.len()
    }

    pub fn curve_rank(&self) -> usize {
        self.curve_names.len()
    }

    pub fn divisor_names(&self) -> &[String] {
        &self.divisor_names
    }

    pub fn curve_names(&self) -> &[String] {
        &self.curve_names
    }

    pub fn divisor_index(&self, name: &str) -> Option<usize> {
        self.divisor_names.iter().position(|n| n == name)
    }

    pub fn curve_index(&self, name: &str) -> Option<usize> {
        self.curve_names.iter().position(|n| n == name)
    }

    pub fn basis_divisor(&self, i: usize) -> DivisorClass {
        DivisorClass::basis(self.divisor_rank(), i)
    }

    pub fn basis_curve(&self, i: usize) -> CurveClass {
        CurveClass::basis(self.curve_rank(), i)
    }

    pub fn divisor_by_name(&self, name: &str) -> Option<DivisorClass> {
        self.divisor_index(name).map(|i| self.basis_divisor(i))
    }

    pub fn curve_by_name(&self, name: &str) -> Option<CurveClass> {
        self.curve_index(name).map(|i| self.basis_curve(i))
    }

    pub fn c1(&self) -> &DivisorClass {
        &self.c1
    }

    pub fn c2(&self) -> &CurveClass {
        &self.c2
    }

    pub fn provenance(&self) -> &[BlowupRecord] {
        &self.provenance
    }

    fn check_divisor(&self, d: &DivisorClass) -> Result<(), ChowError> {
        if d.rank() != self.divisor_rank() {
            return Err(ChowError::DimensionMismatch(format!(
                "divisor class has {} coordinates, model has {} divisor generators",
                d.rank(),
                self.divisor_rank()
            )));
        }
        Ok(())
    }

    fn check_curve(&self, c: &CurveClass) -> Result<(), ChowError> {
        if c.rank() != self.curve_rank() {
            return Err(ChowError::DimensionMismatch(format!(
                "curve class has {} coordinates, model has {} curve generators",
                c.rank(),
                self.curve_rank()
            )));
        }
        Ok(())
    }

    /// The H² × H⁴ → ℚ pairing.
    pub fn pair(&self, d: &DivisorClass, c: &CurveClass) -> Result<Rat, ChowError> {
        self.check_divisor(d)?;
        self.check_curve(c)?;
        let mut total = Rat::zero();
        for (i, a) in d.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in c.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                total += a * b * &self.pairing[i][j];
            }
        }
        Ok(total)
    }

    /// Cup product of two divisor classes, as a curve class. Bilinear and
    /// symmetric.
    pub fn mul_divisors(
        &self,
        a: &DivisorClass,
        b: &DivisorClass,
    ) -> Result<CurveClass, ChowError> {
        self.check_divisor(a)?;
        self.check_divisor(b)?;
        let mut out = CurveClass::zero(self.curve_rank());
        for (i, x) in a.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs().iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let s = x * y;
                out = out.add(&self.mult[i][j].scale(&s));
            }
        }
        Ok(out)
    }

    /// Triple product of divisor classes.
    pub fn triple(
        &self,
        a: &DivisorClass,
        b: &DivisorClass,
        c: &DivisorClass,
    ) -> Result<Rat, ChowError> {
        let ab = self.mul_divisors(a, b)?;
        self.pair(c, &ab)
    }

    /// Degree-6 intersection product: three divisors, or one divisor and
    /// one curve (in either order).
    pub fn intersect(&self, factors: &[Factor]) -> Result<Rat, ChowError> {
        match factors {
            [Factor::Div(a), Factor::Div(b), Factor::Div(c)] => self.triple(a, b, c),
            [Factor::Div(d), Factor::Curve(c)] | [Factor::Curve(c), Factor::Div(d)] => {
                self.pair(d, c)
            }
            _ => Err(ChowError::WrongDegree),
        }
    }

    /// γ = c₁·C + 2g − 2 for a prospective curve center; errors if the
    /// pairing is not an integer.
    pub fn center_gamma(&self, center: &CurveCenterSpec) -> Result<i64, ChowError> {
        let pairing = self.pair(&self.c1, &center.class)?;
        match rat::to_i64(&pairing) {
            Some(deg) => Ok(deg + 2 * i64::from(center.genus) - 2),
            None => Err(ChowError::NonIntegral {
                what: "c1·C for the curve center".to_string(),
                value: pairing,
            }),
        }
    }

    /// Blowup at a point. Appends divisor `E⟨k⟩` and curve `l⟨k⟩`.
    #[allow(clippy::needless_range_loop)] // table block copies read best indexed
    pub fn blow_up_point(&self) -> ThreefoldModel {
        let nd = self.divisor_rank();
        let nc = self.curve_rank();
        let k = self.provenance.len() + 1;

        let mut divisor_names = self.divisor_names.clone();
        divisor_names.push(format!("E{k}"));
        let mut curve_names = self.curve_names.clone();
        curve_names.push(format!("l{k}"));

        let mut pairing = vec![vec![Rat::zero(); nc + 1]; nd + 1];
        for i in 0..nd {
            for j in 0..nc {
                pairing[i][j] = self.pairing[i][j].clone();
            }
        }
        pairing[nd][nc] = rat::int(-1); // E·l = −1

        let mut mult = vec![vec![CurveClass::zero(nc + 1); nd + 1]; nd + 1];
        for i in 0..nd {
            for j in 0..nd {
                mult[i][j] = self.mult[i][j].extended();
            }
        }
        // π*a·E = 0 rows/columns stay zero; E·E = −l.
        let mut ee = CurveClass::zero(nc + 1);
        ee.coeffs[nc] = rat::int(-1);
        mult[nd][nd] = ee;

        let mut c1 = self.c1.extended();
        c1.coeffs[nd] = rat::int(-2);
        let c2 = self.c2.extended();

        let mut provenance = self.provenance.clone();
        provenance.push(BlowupRecord::Point {
            exceptional_index: nd,
            new_curve_index: nc,
        });

        ThreefoldModel {
            divisor_names,
            curve_names,
            pairing,
            mult,
            c1,
            c2,
            provenance,
        }
    }

    /// Blowup along a smooth curve. Appends divisor `E⟨k⟩` and fiber
    /// curve `f⟨k⟩`. Rejects centers whose tau violates the sign or
    /// parity constraints, and centers with a non-integral c₁-degree.
    #[allow(clippy::needless_range_loop)] // table block copies read best indexed
    pub fn blow_up_curve(&self, center: CurveCenterSpec) -> Result<ThreefoldModel, ChowError> {
        self.check_curve(&center.class)?;
        let gamma = self.center_gamma(&center)?;
        if let Some(tau) = center.tau {
            if tau > 0 {
                return Err(ChowError::TauPositive(tau));
            }
            if (tau - gamma).rem_euclid(2) != 0 {
                return Err(ChowError::TauParity { tau, gamma });
            }
            // gamma odd forces tau odd, hence tau ≤ −1 already.
        }

        let nd = self.divisor_rank();
        let nc = self.curve_rank();
        let k = self.provenance.len() + 1;

        let mut divisor_names = self.divisor_names.clone();
        divisor_names.push(format!("E{k}"));
        let mut curve_names = self.curve_names.clone();
        curve_names.push(format!("f{k}"));

        let mut pairing = vec![vec![Rat::zero(); nc + 1]; nd + 1];
        for i in 0..nd {
            for j in 0..nc {
                pairing[i][j] = self.pairing[i][j].clone();
            }
        }
        pairing[nd][nc] = rat::int(-1); // F·f = −1

        let c1_dot_center = self.pair(&self.c1, &center.class)?;

        let mut mult = vec![vec![CurveClass::zero(nc + 1); nd + 1]; nd + 1];
        for i in 0..nd {
            for j in 0..nd {
                mult[i][j] = self.mult[i][j].extended();
            }
        }
        // π*a·F = (a·C)·f.
        for i in 0..nd {
            let a_dot_c = self.pair(&self.basis_divisor(i), &center.class)?;
            let mut af = CurveClass::zero(nc + 1);
            af.coeffs[nc] = a_dot_c;
            mult[i][nd] = af.clone();
            mult[nd][i] = af;
        }
        // F·F = −π*C + γ·f.
        let mut ff = center.class.extended().neg();
        ff.coeffs[nc] = rat::int(gamma);
        mult[nd][nd] = ff;

        let mut c1 = self.c1.extended();
        c1.coeffs[nd] = rat::int(-1);
        let mut c2 = self.c2.extended().add(&center.class.extended());
        c2.coeffs[nc] = -c1_dot_center;

        let mut provenance = self.provenance.clone();
        provenance.push(BlowupRecord::Curve {
            exceptional_index: nd,
            new_curve_index: nc,
            center,
            gamma,
        });

        Ok(ThreefoldModel {
            divisor_names,
            curve_names,
            pairing,
            mult,
            c1,
            c2,
            provenance,
        })
    }

    fn require_blowup(&self) -> Result<&BlowupRecord, ChowError> {
        self.provenance
            .last()
            .ok_or_else(|| ChowError::ModelMismatch("model has no blowup to undo".to_string()))
    }

    /// π* of a divisor class of the parent of the last blowup.
    pub fn pullback_divisor(&self, x: &DivisorClass) -> Result<DivisorClass, ChowError> {
        self.require_blowup()?;
        if x.rank() != self.divisor_rank() - 1 {
            return Err(ChowError::ModelMismatch(format!(
                "class has {} coordinates, parent model has {}",
                x.rank(),
                self.divisor_rank() - 1
            )));
        }
        Ok(x.extended())
    }

    /// π* of a curve class of the parent of the last blowup.
    pub fn pullback_curve(&self, z: &CurveClass) -> Result<CurveClass, ChowError> {
        self.require_blowup()?;
        if z.rank() != self.curve_rank() - 1 {
            return Err(ChowError::ModelMismatch(format!(
                "class has {} coordinates, parent model has {}",
                z.rank(),
                self.curve_rank() - 1
            )));
        }
        Ok(z.extended())
    }

    /// π_* of a divisor class of this model (drops the exceptional
    /// coordinate of the last blowup).
    pub fn pushforward_divisor(&self, x: &DivisorClass) -> Result<DivisorClass, ChowError> {
        self.require_blowup()?;
        self.check_divisor(x)?;
        Ok(x.truncated())
    }

    /// π_* of a curve class of this model (drops the l/f coordinate of
    /// the last blowup).
    pub fn pushforward_curve(&self, z: &CurveClass) -> Result<CurveClass, ChowError> {
        self.require_blowup()?;
        self.check_curve(z)?;
        Ok(z.truncated())
    }

    /// Strict transform of a parent curve class under the last blowup,
    /// with user-supplied intersection multiplicity `m` against the
    /// center: π*z − m·(l or f).
    pub fn strict_transform(&self, z: &CurveClass, m: u32) -> Result<CurveClass, ChowError> {
        let record = self.require_blowup()?;
        let fiber_index = record.new_curve_index();
        let mut out = self.pullback_curve(z)?;
        out.coeffs[fiber_index] -= rat::int(i64::from(m));
        Ok(out)
    }

    /// Zero-section class C₀ = −F·F + ((τ+γ)/2)·f of the exceptional
    /// ruled surface of the curve blowup at `blowup_index`, equal to
    /// π*C + ((τ−γ)/2)·f in basis coordinates. Rejects τ of the wrong
    /// parity (the class would not be integral over the generators).
    pub fn zero_section_class(
        &self,
        blowup_index: usize,
        tau: i64,
    ) -> Result<CurveClass, ChowError> {
        let record = self
            .provenance
            .get(blowup_index)
            .ok_or(ChowError::NoSuchBlowup(blowup_index))?;
        let (exc, fiber, gamma) = match record {
            BlowupRecord::Curve {
                exceptional_index,
                new_curve_index,
                gamma,
                ..
            } => (*exceptional_index, *new_curve_index, *gamma),
            BlowupRecord::Point { .. } => return Err(ChowError::NotCurveBlowup(blowup_index)),
        };
        if (tau - gamma).rem_euclid(2) != 0 {
            return Err(ChowError::TauParity { tau, gamma });
        }
        let exceptional = self.basis_divisor(exc);
        let ff = self.mul_divisors(&exceptional, &exceptional)?;
        let mut out = ff.neg();
        out.coeffs[fiber] += rat::frac(tau + gamma, 2);
        Ok(out)
    }

    /// Checks internal consistency: table dimensions, symmetry of the
    /// mult table, and full permutation symmetry of the triple product
    /// on basis elements.
    pub fn validate(&self) -> Result<(), ChowError> {
        let nd = self.divisor_rank();
        let nc = self.curve_rank();
        if self.pairing.len() != nd
            || self.pairing.iter().any(|row| row.len() != nc)
            || self.mult.len() != nd
            || self
                .mult
                .iter()
                .any(|row| row.len() != nd || row.iter().any(|c| c.rank() != nc))
            || self.c1.rank() != nd
            || self.c2.rank() != nc
        {
            return Err(ChowError::DimensionMismatch(
                "pairing/mult tables do not match the bases".to_string(),
            ));
        }
        for a in 0..nd {
            for b in 0..nd {
                if self.mult[a][b] != self.mult[b][a] {
                    return Err(ChowError::ModelMismatch(format!(
                        "mult table asymmetric at ({a},{b})"
                    )));
                }
                for c in 0..nd {
                    let abc = self.pair(&self.basis_divisor(c), &self.mult[a][b])?;
                    let bca = self.pair(&self.basis_divisor(a), &self.mult[b][c])?;
                    if abc != bca {
                        return Err(ChowError::ModelMismatch(format!(
                            "triple product not symmetric on basis ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Renders a divisor class over the basis names, e.g. `4*H - 2*E1`.
    pub fn render_divisor(&self, d: &DivisorClass) -> String {
        render_class(d.coeffs(), &self.divisor_names)
    }

    /// Renders a curve class over the basis names, e.g. `17*L - 10*f1`.
    pub fn render_curve(&self, c: &CurveClass) -> String {
        render_class(c.coeffs(), &self.curve_names)
    }

    /// Human-readable description of the whole model: bases, pairing,
    /// products, Chern classes and provenance.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "divisor basis: {}\n",
            self.divisor_names.join(", ")
        ));
        out.push_str(&format!("curve basis:   {}\n", self.curve_names.join(", ")));
        out.push_str(&format!("c1 = {}\n", self.render_divisor(&self.c1)));
        out.push_str(&format!("c2 = {}\n", self.render_curve(&self.c2)));
        out.push_str("pairing (divisor x curve):\n");
        for (i, row) in self.pairing.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(rat::render).collect();
            out.push_str(&format!(
                "  {:<4} [{}]\n",
                self.divisor_names[i],
                cells.join(", ")
            ));
        }
        out.push_str("products (divisor x divisor):\n");
        for i in 0..self.divisor_rank() {
            for j in i..self.divisor_rank() {
                out.push_str(&format!(
                    "  {}*{} = {}\n",
                    self.divisor_names[i],
                    self.divisor_names[j],
                    self.render_curve(&self.mult[i][j])
                ));
            }
        }
        if self.provenance.is_empty() {
            out.push_str("provenance: base model\n");
        } else {
            out.push_str("provenance:\n");
            for (k, record) in self.provenance.iter().enumerate() {
                match record {
                    BlowupRecord::Point { .. } => {
                        out.push_str(&format!("  {}: point blowup (E{})\n", k + 1, k + 1));
                    }
                    BlowupRecord::Curve { center, gamma, .. } => {
                        out.push_str(&format!(
                            "  {}: curve blowup (E{}), genus {}, gamma {}{}{}\n",
                            k + 1,
                            k + 1,
                            center.genus,
                            gamma,
                            if center.decomposable {
                                ", decomposable"
                            } else {
                                ""
                            },
                            match center.tau {
                                Some(t) => format!(", tau {t}"),
                                None => String::new(),
                            },
                        ));
                    }
                }
            }
        }
        out
    }
}

fn render_class(coeffs: &[Rat], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let term = if mag == rat::int(1) {
            name.clone()
        } else {
            format!("{}*{}", mag, name)
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&term);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
