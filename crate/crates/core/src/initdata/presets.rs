use super::{InitialData, Twist};
use crate::error::{Error, Result};
use crate::rootdata::{Lattice, RootSystem, Vector};

/// Lattice selection for the generic preset families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeChoice {
    /// The root lattice `Z R_0`.
    Root,
    /// The weight lattice `P(R_0)`.
    Weight,
    /// The coordinate lattice `Z^n` of the realization.
    Standard,
    /// The doubled coordinate lattice `(2Z)^n`.  Never a valid choice (it
    /// does not contain the root lattice); offered so the validation error
    /// path is reachable from the command line.
    DoubleStandard,
}

impl LatticeChoice {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "root" => Some(LatticeChoice::Root),
            "weight" => Some(LatticeChoice::Weight),
            "zn" => Some(LatticeChoice::Standard),
            "2zn" => Some(LatticeChoice::DoubleStandard),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            LatticeChoice::Root => "root",
            LatticeChoice::Weight => "weight",
            LatticeChoice::Standard => "zn",
            LatticeChoice::DoubleStandard => "2zn",
        }
    }
}

/// Build the chosen lattice for a root system.
pub fn lattice_for_choice(rs: &RootSystem, choice: LatticeChoice) -> Lattice {
    match choice {
        LatticeChoice::Root => Lattice::from_basis("ZR0", rs.simple_roots().to_vec()),
        LatticeChoice::Weight => Lattice::from_basis("P(R0)", rs.fundamental_weights()),
        LatticeChoice::Standard => Lattice::standard(rs.ambient_dim()),
        LatticeChoice::DoubleStandard => Lattice::from_basis(
            "(2Z)^n",
            (0..rs.ambient_dim())
                .map(|i| Vector::unit(rs.ambient_dim(), i).scale(&crate::qnum::sc(2)))
                .collect(),
        ),
    }
}

/// The dual realization of a root system under the given twist:
/// `alpha -> mu_alpha alpha^`.
pub fn dual_root_system(rs: &RootSystem, twist: Twist) -> RootSystem {
    let mu = |root: &Vector| match twist {
        Twist::Untwisted => crate::qnum::sc(1),
        Twist::Twisted => root.norm2() * crate::qnum::frac(1, 2),
    };
    let root_d = |root: &Vector| root.covector().scale(&mu(root));
    RootSystem::from_parts(
        format!("{}d", rs.label()),
        rs.ambient_dim(),
        rs.simple_roots().iter().map(&root_d).collect(),
        rs.positive_roots().iter().map(&root_d).collect(),
    )
}

/// `GL`-type data: type A in the full coordinate space, both lattices
/// `Z^(n+1)`.  The argument is the number of torus variables `n + 1 >= 2`.
pub fn gl(n_plus_1: usize) -> Result<InitialData> {
    if n_plus_1 < 2 {
        return Err(Error::UnsupportedFamily(
            "gl requires at least 2 variables".into(),
        ));
    }
    let rs = RootSystem::type_a(n_plus_1 - 1);
    let lam = Lattice::standard(n_plus_1);
    InitialData::new(
        format!("gl({n_plus_1})"),
        rs,
        Twist::Untwisted,
        lam.clone(),
        lam,
    )
}

/// Koornwinder data: type B (rank `n >= 1`), twisted, both lattices `Z^n`.
pub fn koornwinder(n: usize) -> Result<InitialData> {
    if n < 1 {
        return Err(Error::UnsupportedFamily(
            "koornwinder requires rank >= 1".into(),
        ));
    }
    let rs = RootSystem::type_b(n);
    let lam = Lattice::standard(n);
    InitialData::new(
        format!("koornwinder({n})"),
        rs,
        Twist::Twisted,
        lam.clone(),
        lam,
    )
}

/// The exceptional nonreduced rank-two data: type C_2, untwisted, root
/// lattice and coroot lattice.
pub fn c2_exceptional() -> Result<InitialData> {
    let rs = RootSystem::type_c(2);
    let lam = lattice_for_choice(&rs, LatticeChoice::Root);
    let lam_d = Lattice::from_basis(
        "ZR0^",
        rs.simple_roots().iter().map(|a| a.covector()).collect(),
    );
    InitialData::new("c2-exceptional", rs, Twist::Untwisted, lam, lam_d)
}

/// Generic untwisted family over a chosen root system.
pub fn reduced_untwisted(
    rs: RootSystem,
    lat: LatticeChoice,
    lat_dual: LatticeChoice,
) -> Result<InitialData> {
    generic(rs, Twist::Untwisted, lat, lat_dual)
}

/// Generic twisted family over a chosen root system.
pub fn reduced_twisted(
    rs: RootSystem,
    lat: LatticeChoice,
    lat_dual: LatticeChoice,
) -> Result<InitialData> {
    generic(rs, Twist::Twisted, lat, lat_dual)
}

fn generic(
    rs: RootSystem,
    twist: Twist,
    lat: LatticeChoice,
    lat_dual: LatticeChoice,
) -> Result<InitialData> {
    let label = format!(
        "{}-{}-{}-{}",
        match twist {
            Twist::Untwisted => "untwisted",
            Twist::Twisted => "twisted",
        },
        rs.label(),
        lat.label(),
        lat_dual.label()
    );
    let lam = lattice_for_choice(&rs, lat);
    let dual_rs = dual_root_system(&rs, twist);
    let lam_d = lattice_for_choice(&dual_rs, lat_dual);
    InitialData::new(label, rs, twist, lam, lam_d)
}

/// Type B over `Z^n` with the untwisted affine extension; its dual is the
/// reduced untwisted type-C system.
pub fn b_untwisted_zn(n: usize) -> Result<InitialData> {
    if n < 2 {
        return Err(Error::UnsupportedFamily(
            "b-untwisted-zn requires rank >= 2".into(),
        ));
    }
    let rs = RootSystem::type_b(n);
    let lam = Lattice::standard(n);
    InitialData::new(
        format!("b-untwisted-zn({n})"),
        rs,
        Twist::Untwisted,
        lam.clone(),
        lam,
    )
}

/// The Koornwinder quintuple with the dual lattice enlarged to the weight
/// lattice: the orbit count drops to three and the dual system is reduced.
pub fn b_twisted_weightlattice(n: usize) -> Result<InitialData> {
    if n < 2 {
        return Err(Error::UnsupportedFamily(
            "b-twisted-weightlattice requires rank >= 2".into(),
        ));
    }
    let rs = RootSystem::type_b(n);
    let lam = Lattice::standard(n);
    let lam_d = Lattice::from_basis("P(R0)", rs.fundamental_weights());
    InitialData::new(
        format!("b-twisted-weightlattice({n})"),
        rs,
        Twist::Twisted,
        lam,
        lam_d,
    )
}
