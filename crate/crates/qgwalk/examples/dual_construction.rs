//! Numerical Wedderburn duals: block-diagonalise the convolution algebra of
//! a quantum group and transport the Hopf structure, then sanity-check the
//! classification facts that come out.

use qgwalk::catalog;
use qgwalk::dual::{dual, group_like_elements};

fn main() -> qgwalk::Result<()> {
    // abelian classical group: the dual is again commutative and cocommutative
    let z5 = catalog::function_algebra(&catalog::cyclic(5)?)?;
    let d = dual(&z5)?;
    let r = d.verify()?;
    println!("dual(F(Z5)): blocks {:?}, commutative {}, cocommutative {}",
        d.shape.dims(), r.commutative, r.cocommutative);

    // nonabelian classical group: noncommutative cocommutative dual
    let s3 = catalog::function_algebra(&catalog::symmetric(3)?)?;
    let d = dual(&s3)?;
    let r = d.verify()?;
    println!("dual(F(S3)): blocks {:?}, commutative {}, cocommutative {}",
        d.shape.dims(), r.commutative, r.cocommutative);

    // the Kac–Paljutkin group is self-dual in shape
    let (kp, _) = catalog::kac_paljutkin()?;
    let d = dual(&kp)?;
    println!("dual(KP):   blocks {:?} (KP itself: {:?})", d.shape.dims(), kp.shape.dims());
    let dd = dual(&d)?;
    assert_eq!(dd.shape.sorted_dims(), kp.shape.sorted_dims());

    // the second Sekine group is a dual group in disguise: its dual is a
    // function algebra on eight points, and the group-likes form that group
    let s2 = catalog::sekine(2)?;
    let d = dual(&s2)?;
    println!("dual(KP_2): blocks {:?}", d.shape.dims());
    assert_eq!(d.shape.dims(), vec![1; 8]);
    let likes = group_like_elements(&s2)?;
    let order_two = likes
        .iter()
        .filter(|x| {
            x.mul(x)
                .map(|sq| {
                    sq.sub(&qgwalk::blockalg::AlgebraElement::unit(&s2.shape))
                        .map(|d| d.is_zero(1e-8))
                        .unwrap_or(false)
                })
                .unwrap_or(false)
        })
        .count();
    // five involutions (plus the identity) pins the dihedral group of order 8
    println!("KP_2 has {} group-like elements, {order_two} of them involutions", likes.len());
    assert_eq!(likes.len(), 8);
    assert_eq!(order_two, 6);
    Ok(())
}
