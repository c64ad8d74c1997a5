use num_complex::Complex64;
use traffic_ensembles::{
    band_mask, sample_haar_orthogonal, sample_rbm, sample_wigner, stream_rng, BandProfile,
    BandWidth, EntryLaw, EntrySpec,
};

/// Mean and standard error of a sample.
fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}

#[test]
fn complex_gaussian_has_zero_pseudo_variance() {
    let spec = EntrySpec::gaussian(Complex64::new(0.0, 0.0)).unwrap();
    let mut rng = stream_rng(100, 0);
    let draws: Vec<Complex64> = (0..100_000)
        .map(|_| spec.sample_offdiag(&mut rng))
        .collect();
    let re: Vec<f64> = draws.iter().map(|x| (x * x).re).collect();
    let im: Vec<f64> = draws.iter().map(|x| (x * x).im).collect();
    for part in [re, im] {
        let (m, se) = mean_se(&part);
        assert!(m.abs() <= 3.0 * se, "{m} ± {se}");
    }
}

#[test]
fn discrete_law_matches_declared_moments() {
    // Three-point law: ±√3 with probability 1/6 each, 0 with probability 2/3.
    let s = 3f64.sqrt();
    let law = EntryLaw::discrete(vec![-s, 0.0, s], vec![1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0]).unwrap();
    assert!((law.moment(4) - 3.0).abs() < 1e-12);
    let mut rng = stream_rng(101, 0);
    let fourth: Vec<f64> = (0..50_000).map(|_| law.sample(&mut rng).powi(4)).collect();
    let (m, se) = mean_se(&fourth);
    assert!((m - 3.0).abs() <= 3.0 * se);
}

#[test]
fn haar_first_entry_has_mean_square_one_over_n() {
    let n = 10;
    let vals: Vec<f64> = (0..10_000)
        .map(|k| {
            sample_haar_orthogonal(n, &mut stream_rng(102, k))
                .get(0, 0)
                .re
                .powi(2)
        })
        .collect();
    let (m, se) = mean_se(&vals);
    assert!((m - 0.1).abs() <= 3.0 * se, "{m} ± {se}");
}

#[test]
fn samples_are_hermitian_and_masks_symmetric() {
    let profiles = [
        BandProfile::Wigner,
        BandProfile::Fixed(2),
        BandProfile::Proportional(0.3),
        BandProfile::Slow(BandWidth::Power {
            scale: 1.0,
            exponent: 0.5,
        }),
        BandProfile::Periodic(BandWidth::Constant(3)),
    ];
    let spec = EntrySpec::gaussian(Complex64::new(0.2, 0.5)).unwrap();
    for p in &profiles {
        let a = sample_rbm(25, p, &spec, &mut stream_rng(103, 0)).unwrap();
        assert_eq!(a.hermitian_defect(), 0.0);
        let m = band_mask(25, p).unwrap();
        assert_eq!(m, m.transpose());
    }
    let real = sample_wigner(12, &EntrySpec::real_gaussian(), &mut stream_rng(104, 0));
    assert!(real.is_real());
}

#[test]
fn periodic_rows_are_homogeneous() {
    let n = 20;
    let periodic = band_mask(n, &BandProfile::Periodic(BandWidth::Constant(4)))
        .unwrap()
        .row_sums();
    assert!(periodic.iter().all(|s| *s == periodic[0]));
    let plain = band_mask(n, &BandProfile::Fixed(4)).unwrap().row_sums();
    assert!(plain.iter().any(|s| *s != plain[0]));
}
