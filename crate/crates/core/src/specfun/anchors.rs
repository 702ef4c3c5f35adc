// Airy anchor values (Ai, Ai', Bi, Bi') at integer arguments,
// correctly rounded to f64 from 50-digit evaluations (mpmath 1.3).

pub(super) const ANCHOR_MIN: i32 = -26;
pub(super) const ANCHOR_MAX: i32 = 26;

#[rustfmt::skip]
pub(super) const ANCHORS: [[f64; 4]; 53] = [
    [0.23314283498427382, -0.4558113120566969, 0.08983077591664325, 1.1896741427582942], // z = -26
    [0.16352657883042948, 0.9623788513876974, -0.19214681569037803, 0.8157197157546059], // z = -25
    [-0.14983659008188654, 1.008674407677197, -0.20621104602689683, -0.7362025618430733], // z = -24
    [-0.22693405337408287, -0.5873350900449398, 0.12195196890032856, -1.0870259966754336], // z = -23
    [0.11614415376051412, -1.0924127512708337, 0.23318112230442142, 0.5474219128919457], // z = -22
    [0.22635849367898897, 0.6212944499089271, -0.13498730557827748, 1.0357155970136587], // z = -21
    [-0.1764061270779847, 0.8928628567364713, -0.20013930932265134, -0.7914290338395364], // z = -20
    [-0.14166127688042265, -1.0049611250051396, 0.2301210900945883, -0.6144737539560741], // z = -19
    [0.2712045408044142, -0.15903891520496802, 0.038372488508384, 1.1511870941086417], // z = -18
    [-0.10526230029095239, 1.05868457664466, -0.25713592100234317, -0.4378020657909875], // z = -17
    [-0.1430579316690997, -0.9747644416212727, 0.2431231514282272, -0.5684556059761354], // z = -16
    [0.2782174908708289, 0.272374204308642, -0.06912659453101005, 1.0764297530843747], // z = -15
    [-0.2659834827840778, 0.44302487700284365, -0.11966555279762452, -0.9974118189493335], // z = -14
    [0.17151043937053703, -0.8715196778799533, 0.2426132290926272, 0.6230972488192877], // z = -13
    [-0.06655517505437313, 1.0231104533679707, -0.2957199120780731, -0.23673219783112331], // z = -12
    [-0.008759589255702381, -1.0273278736645794, 0.3096547674267819, -0.022022995314464465], // z = -11
    [0.04024123848644319, 0.99626504413279, -0.3146798296438386, 0.11941411339990923], // z = -10
    [-0.022133721547341403, -0.9756639809263316, 0.3249473234552449, -0.05740051384366925], // z = -9
    [-0.0527050503563862, 0.9355609381983065, -0.33125158075113786, -0.1594504978129814], // z = -8
    [0.18428083525050565, -0.7710081684101265, 0.293762071854414, 0.4982445900581135], // z = -7
    [-0.3291451736298231, 0.3459354872813429, -0.14669837667055705, -0.812898785105067], // z = -6
    [0.35076100902411433, 0.32719281855444315, -0.13836913490160058, 0.7784117730018992], // z = -5
    [-0.07026553294928951, -0.7906285753685813, 0.3922347057069993, -0.1166705674383409], // z = -4
    [-0.37881429367765806, 0.3145837692165988, -0.19828962637492653, -0.6756112226852585], // z = -3
    [0.22740742820168558, 0.618259020741691, -0.4123025879563985, 0.2787951669211695], // z = -2
    [0.5355608832923521, -0.01016056711664521, 0.1039973894969446, 0.5923756264227924], // z = -1
    [0.3550280538878172, -0.2588194037928068, 0.6149266274460007, 0.4482883573538264], // z = 0
    [0.13529241631288141, -0.1591474412967932, 1.2074235949528713, 0.9324359333927756], // z = 1
    [0.03492413042327438, -0.05309038443365363, 3.2980949999782148, 4.10068204993289], // z = 2
    [0.006591139357460719, -0.011912976705951319, 14.037328963730232, 22.92221496638217], // z = 3
    [0.0009515638512048018, -0.001958640950204179, 83.84707140846814, 161.9266835046134], // z = 4
    [0.00010834442813607442, -0.0002474138908684625, 657.7920441711711, 1435.8190802179824], // z = 5
    [9.947694360252889e-06, -2.4765200397034955e-05, 6536.446104809864, 15725.602621930477], // z = 6
    [7.492128863997167e-07, -2.008150894738792e-06, 80327.79070943025, 209552.6708739713], // z = 7
    [4.6922076160992316e-08, -1.3414392979067865e-07, 1199586.00412446, 3354342.3127445388], // z = 8
    [2.47116843087249e-09, -7.480641389658946e-09, 21472868.891435347, 63807489.78090821], // z = 9
    [1.1047532552898686e-10, -3.5206336767389237e-10, 455641153.54822516, 1429236134.4828658], // z = 10
    [4.2262758649603595e-12, -1.4111441246628517e-11, 11355782530.430477, 37400168196.92698], // z = 11
    [1.3931846888753607e-13, -4.854736554985309e-13, 329807225829.07416, 1135507502443.3708], // z = 12
    [3.981776078833335e-15, -1.4432080573972625e-14, 11086706719059.404, 39757544969908.34], // z = 13
    [9.920205491192377e-17, -3.729310110017901e-16, 428805361786534.1, 1596691411588002.8], // z = 14
    [2.1649625207379925e-18, -8.420567954017772e-18, 1.8982099567493588e+16, 7.319749203407011e+16], // z = 15
    [4.1568888289170244e-20, -1.669188676838181e-19, 9.572123906049187e+17, 3.8137435071218627e+18], // z = 16
    [7.050197298388614e-22, -2.917148219293314e-21, 5.475303811330587e+19, 2.249400291065727e+20], // z = 17
    [1.0600466825247956e-23, -4.512001860681942e-23, 3.538918250356569e+21, 1.4964796503287851e+22], // z = 18
    [1.4177043777933528e-25, -6.198145827130015e-25, 2.5755355522344584e+23, 1.1192350063395888e+24], // z = 19
    [1.6916728686705404e-27, -7.586391625748354e-27, 2.103765049651104e+25, 9.381839336133965e+25], // z = 20
    [1.8061384424703834e-29, -8.298130258300446e-29, 1.9229446248638084e+27, 8.788996052843164e+27], // z = 21
    [1.7299602403536983e-31, -8.13377403844754e-31, 1.961458140918623e+29, 9.177627869081826e+29], // z = 22
    [1.4901860957672062e-33, -7.162788572866304e-33, 2.227005479622861e+31, 1.0655997437051948e+32], // z = 23
    [1.1570810853985424e-35, -5.680506160122679e-35, 2.807731836810731e+33, 1.3725615969197962e+34], // z = 24
    [8.116026824691387e-38, -4.066089337243281e-37, 3.9220307780413816e+35, 1.957073508323331e+36], // z = 25
    [5.15301114519834e-40, -2.63246215787461e-39, 6.057260305859429e+37, 3.0827567872835837e+38], // z = 26
];
