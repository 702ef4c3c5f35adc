// Airy reference values on [-25, 25], correctly rounded f64 from
// 50-digit evaluations (mpmath 1.3). Columns: z, Ai, Ai', Bi, Bi'.
#[rustfmt::skip]
pub const AIRY_REFERENCE: [[f64; 5]; 117] = [
    [-25.0, 0.16352657883042948, 0.9623788513876974, -0.19214681569037803, 0.8157197157546059],
    [-24.999, 0.1644869096212679, 0.9582787563237534, -0.19132869757521534, 0.820513073855691],
    [-24.494949, -0.01925387249332729, -1.2517264094301104, 0.25287060551112556, -0.09271231527840657],
    [-23.989899, -0.13946873556226366, 1.0437415480891803, -0.21339200403766867, -0.6853420241770949],
    [-23.484848, 0.24399237164452106, -0.3774624245874728, 0.0784246454444879, 1.1832645726626527],
    [-22.979798, -0.2377169051216588, -0.4793493145231094, 0.09945444107497778, -1.1384822122335587],
    [-22.474747, 0.11053636697482412, 1.1122826012155158, -0.2343588995052466, 0.5214262183704362],
    [-21.969697, 0.08198137925177248, -1.1585229167847475, 0.24736356928063735, 0.3870820750288195],
    [-21.464646, -0.234538961470264, 0.5394638439697919, -0.11702725102844891, -1.0879979765200696],
    [-20.959596, 0.2474517439621877, 0.41990537435154024, -0.09107296411631711, 1.1318079824728187],
    [-20.454545, -0.09712161043849453, -1.1177397110222431, 0.2468746100150427, -0.4362399957698294],
    [-20.0, -0.1764061270779847, 0.8928628567364713, -0.20013930932265134, -0.7914290338395364],
    [-19.949495, -0.12721720064410577, 1.0466782868881348, -0.23469272635463573, -0.5711657311269513],
    [-19.444444, 0.2646151023417115, -0.2016939287501606, 0.04651034301395052, 1.1674656119016706],
    [-18.939394, -0.19695379728042392, -0.8091909196629421, 0.18533635249536082, -0.8547049865782211],
    [-18.434343, -0.03867625593227895, 1.1566827930527877, -0.2695171958929554, -0.16971609852993697],
    [-17.929293, 0.2480309466544286, -0.4913124605403419, 0.11684505151238295, 1.0518947733839985],
    [-17.424242, -0.23130258893351888, -0.6329784859557536, 0.15084002778591005, -0.9633761334093319],
    [-17.0, -0.10526230029095239, 1.05868457664466, -0.25713592100234317, -0.4378020657909875],
    [-16.919192, -0.015502816638087896, 1.142258588536452, -0.27774592191891845, -0.06787292048247122],
    [-16.414141, 0.25414750796730706, -0.47506422439414864, 0.11820926021764183, 1.0314989816701776],
    [-15.909091, -0.22040105086380832, -0.7083006472961595, 0.17670538871228408, -0.8763540111136426],
    [-15.40404, -0.06994078583077341, 1.0823765145739674, -0.27605625385466304, -0.27899429608136495],
    [-14.89899, 0.28406245533998237, -0.1576355627068673, 0.04207159230576297, 1.0972161269382243],
    [-14.393939, -0.14119146683976289, -0.9620016146284417, 0.2529036535783702, -0.5313080512231078],
    [-13.888889, -0.1955605341635051, 0.805871361690891, -0.2171695370656514, -0.7327612201708528],
    [-13.383838, 0.2670210756618405, 0.4634431271020163, -0.1253084366681806, 0.9745918062722192],
    [-12.878788, 0.053116027711636545, -1.0506644928136875, 0.2930357760760257, 0.19631741276321799],
    [-12.5, -0.27627456138116024, -0.41933133041950515, 0.11703336725739277, -0.974516536167174],
    [-12.373737, -0.3005034845296674, 0.0411319672169211, -0.0134171174162678, -1.0574187325894662],
    [-11.868687, 0.06997561546672931, 1.0205823110478531, -0.2957868568299646, 0.23486827737155413],
    [-11.363636, 0.28501104221186174, -0.38084792436895676, 0.11482442790293267, 0.9633986073634246],
    [-10.858586, -0.1478616045970312, -0.9042760687421256, 0.2733535385035569, -0.4810094087838202],
    [-10.353535, -0.2647755857031969, 0.5397958162548733, -0.16972020456923895, -0.8561802600543057],
    [-9.848485, 0.18101443349790458, 0.826958696305624, -0.2620057428244785, 0.5615130059462904],
    [-9.343434, 0.2665781607330702, -0.5486901478773701, 0.18180004979200723, 0.8198645732204118],
    [-8.838384, -0.17122891785026054, -0.833858894117129, 0.2787930034250178, -0.5012930160270926],
    [-8.333333, -0.29747985576764396, 0.4168597782341866, -0.14745143971357946, -0.8633973250447318],
    [-8.0, -0.0527050503563862, 0.9355609381983065, -0.33125158075113786, -0.1594504978129814],
    [-7.828283, 0.10782357247275433, 0.8977630839289608, -0.3195378581626367, 0.29159294657568285],
    [-7.323232, 0.33928965355958546, -0.1227427674100894, 0.04960753685732104, 0.920219395286374],
    [-6.818182, 0.028635848073411106, -0.907781188535035, 0.34788498003764246, 0.0875282452018587],
    [-6.313131, -0.3332389665804175, -0.3267602119389881, 0.12473948786608328, -0.832885744244228],
    [-5.808081, -0.22979955004329153, 0.6687807454027294, -0.2813675193332796, -0.56630531629608],
    [-5.30303, 0.18027714349918042, 0.7574897273523198, -0.32493702702924976, 0.40034706991604313],
    [-5.0, 0.35076100902411433, 0.32719281855444315, -0.13836913490160058, 0.7784117730018992],
    [-4.79798, 0.37995869021862616, -0.040448792617240055, 0.027394417452019725, 0.834832373200591],
    [-4.292929, 0.1598329971801496, -0.7328751524437347, 0.3574790562658083, 0.35238260760425105],
    [-3.787879, -0.22699868223878694, -0.666630582796257, 0.334033494687834, -0.42129294321616484],
    [-3.282828, -0.41819671740871955, -0.047353892684820646, 0.0089213382699842, -0.7601385014652456],
    [-2.777778, -0.28351440208251044, 0.5301431661719923, -0.33072541805495514, -0.5043061829394136],
    [-2.272727, 0.045770189396156326, 0.6977748516655273, -0.45469912695649445, 0.022553332920327327],
    [-1.767677, 0.3569226422601142, 0.489882019667006, -0.32741350576573186, 0.4424373183865841],
    [-1.262626, 0.5182375292025632, 0.1473144072465705, -0.05343588463526613, 0.5990264946476109],
    [-1.0, 0.5355608832923521, -0.01016056711664521, 0.1039973894969446, 0.5923756264227924],
    [-0.757576, 0.5187158909374748, -0.12303099590872403, 0.2435737060810982, 0.5558780357130233],
    [-0.5, 0.4757280916105396, -0.20408167033954738, 0.38035265975105387, 0.5059337136238472],
    [-0.252525, 0.4193464119865816, -0.24612333758001254, 0.5002249653373306, 0.46546922209117797],
    [0.0, 0.3550280538878172, -0.2588194037928068, 0.6149266274460007, 0.4482883573538264],
    [0.252525, 0.2905353051730953, -0.2488775863606614, 0.7299338864997221, 0.4703239154617439],
    [0.5, 0.23169360648083348, -0.2249105326646839, 0.8542770431031554, 0.5445725641405923],
    [0.757576, 0.1778766724898642, -0.19215525106366302, 1.0121824025363797, 0.6960649801296805],
    [1.0, 0.13529241631288141, -0.1591474412967932, 1.2074235949528713, 0.9324359333927756],
    [1.262626, 0.0980574330459461, -0.12491867299737396, 1.5010798541835788, 1.3338813659827276],
    [1.767677, 0.04929580158423648, -0.07130135666117968, 2.5017644267752734, 2.8385924158048663],
    [2.272727, 0.022810145346209915, -0.03656471728806175, 4.706177649977909, 6.41073648087257],
    [2.777778, 0.009783738647416397, -0.017094476108066737, 9.847796260916976, 15.328186257718409],
    [3.282828, 0.003911798718356535, -0.0073600439537850094, 22.569123784505763, 38.90796896506921],
    [3.787879, 0.0014646274675197259, -0.002940290241892558, 56.008302430324534, 104.8930355943028],
    [4.292929, 0.0005154836519553566, -0.0010962466324005854, 149.32514242286106, 299.9371582076509],
    [4.79798, 0.0001710979664336845, -0.0003832255985177001, 425.2877711940374, 907.8350185178883],
    [5.0, 0.00010834442813607442, -0.0002474138908684625, 657.7920441711711, 1435.8190802179824],
    [5.30303, 5.370715496451638e-05, -0.0001260943182021567, 1288.2281331171655, 2902.2508854272196],
    [5.808081, 1.5982112645457514e-05, -3.9176881927204604e-05, 4135.448603291686, 9779.42703845427],
    [6.313131, 4.518434839458196e-06, -1.1525459450171214e-05, 14027.600234718673, 34665.84205828903],
    [6.818182, 1.2159738777403084e-06, -3.218246030486051e-06, 50150.834362921385, 129042.37948051274],
    [7.323232, 3.1202740950787015e-07, -8.547309557508551e-07, 188560.34897758372, 503614.4713482367],
    [7.828283, 7.646577248213347e-08, -2.1632073214147129e-07, 744153.1269810502, 2057575.9823344017],
    [8.0, 4.6922076160992316e-08, -1.3414392979067865e-07, 1199586.00412446, 3354342.3127445388],
    [8.333333, 1.792109153832293e-08, -5.225819556536366e-08, 3077260.7338902554, 8788404.021582156],
    [8.838384, 4.022023905226995e-09, -1.2068445815967217e-08, 13313365.252052404, 39193764.81237465],
    [9.343434, 8.654200378958342e-10, -2.6680059073315492e-09, 60176022.98965832, 182292868.73370484],
    [9.848485, 1.7872515266899528e-10, -5.653298383530853e-10, 283805655.6561228, 883289667.9092307],
    [10.353535, 3.5462189694711e-11, -1.1494726182819308e-10, 1394991603.1949613, 4454305345.582409],
    [10.858586, 6.76666769400415e-12, -2.245094965972772e-11, 7138579384.434989, 23355957012.919292],
    [11.363636, 1.2427963789203072e-12, -4.2163775932926635e-12, 37993372998.617615, 127225571510.09195],
    [11.868687, 2.1988569445932315e-13, -7.620906435251584e-13, 210117629196.72827, 719379254399.5511],
    [12.373737, 3.750642468659237e-14, -1.3268106915604903e-13, 1206423836821.9863, 4219018021077.166],
    [12.5, 2.39682782607805e-14, -8.521346564673856e-14, 1878291935622.0518, 6602648681364.295],
    [12.878788, 6.172199057122794e-15, -2.2268431407563337e-14, 7185790158654.817, 25646225836473.863],
    [13.383838, 9.806221559731804e-16, -3.605591365435318e-15, 44366629965151.164, 161470906305229.72],
    [13.888889, 1.5051170268868805e-16, -5.636014056588594e-16, 283753659287391.56, 1052316345634401.4],
    [14.393939, 2.2331418143334164e-17, -8.510747727896245e-17, 1878610652345150.0, 7094313122276944.0],
    [14.89899, 3.2047213338045986e-18, -1.2423175513071867e-17, 1.2866842526049904e+16, 4.944668402587471e+16],
    [15.40404, 4.450785614778338e-19, -1.753994003081077e-18, 9.111391760659125e+16, 3.561093137767317e+17],
    [15.909091, 5.98524186048508e-20, -2.3966005073813904e-19, 6.667033101797069e+17, 2.6486437930845594e+18],
    [16.414141, 7.79736211694707e-21, -3.170818866597594e-20, 5.038238296239026e+18, 2.0334630271676887e+19],
    [16.919192, 9.845554369693059e-22, -4.064186491318468e-21, 3.93010513594752e+19, 1.6107075152837955e+20],
    [17.0, 7.050197298388614e-22, -2.917148219293314e-21, 5.475303811330587e+19, 2.249400291065727e+20],
    [17.424242, 1.205486952759146e-22, -5.049136894234257e-22, 3.1629585918281266e+20, 1.3157154178352514e+21],
    [17.929293, 1.431866166835325e-23, -6.082754563818776e-23, 2.625112397361443e+21, 1.107860117810568e+22],
    [18.434343, 1.650619455867608e-24, -7.109184826696777e-24, 2.245795349903958e+22, 9.611672961068126e+22],
    [18.939394, 1.847431629143903e-25, -8.06411865792133e-25, 1.9796057714874402e+23, 8.588795672265984e+23],
    [19.444444, 2.0083504407095655e-26, -8.881629552518928e-26, 1.7971821889423264e+24, 7.901550374944315e+24],
    [19.949495, 2.1213830017808233e-27, -9.50152796877205e-27, 1.6797461118938805e+25, 7.481361895735128e+25],
    [20.0, 1.6916728686705404e-27, -7.586391625748354e-27, 2.103765049651104e+25, 9.381839336133965e+25],
    [20.454545, 2.178048295610699e-28, -9.877037528802236e-28, 1.6157183117378153e+26, 7.287477623594762e+26],
    [20.959596, 2.1743609150332872e-29, -9.980352133604521e-29, 1.5988378382950156e+27, 7.30054696895651e+27],
    [21.464646, 2.1113529806323677e-30, -9.806327342093081e-30, 1.6270626844097873e+28, 7.519102430801109e+28],
    [21.969697, 1.9947638439491057e-31, -9.372389074554667e-31, 1.7022487016484493e+29, 7.959263715870396e+29],
    [22.474747, 1.8342697122008008e-32, -8.716106824793319e-32, 1.8302714709183924e+30, 8.656386164950507e+30],
    [22.979798, 1.6421125837168184e-33, -7.88960064527689e-33, 2.021853539727521e+31, 9.67008704771478e+31],
    [23.484848, 1.431665760644001e-34, -6.953177189826506e-34, 2.2939812114348335e+32, 1.1092345170004152e+33],
    [23.989899, 1.2159000703943188e-35, -5.968020267408e-35, 2.6724707123824497e+33, 1.3061623754718482e+34],
    [24.494949, 1.0062243632558246e-36, -4.990260475125674e-36, 3.195888740221911e+34, 1.5784423370309945e+35],
    [24.999, 8.156789336675018e-38, -4.0864299079095735e-37, 3.902508986248135e+35, 1.9472930494443213e+36],
    [25.0, 8.116026824691387e-38, -4.066089337243281e-37, 3.9220307780413816e+35, 1.957073508323331e+36],
];

// Far positive z: ln Ai, ln(-Ai') ... wait signs; store ln|.| with known signs.
// Columns: z, ln|Ai|, ln|Ai'|, ln|Bi|, ln|Bi'|.
#[rustfmt::skip]
pub const AIRY_LOG_REFERENCE: [[f64; 5]; 6] = [
    [26.5, -93.0302906566528, -91.38989564274824, 89.5538496215344, 91.19057918617025],
    [30.0, -111.66095404121411, -109.9588407813089, 108.12248407176793, 109.82155430293132],
    [50.0, -237.94607227587855, -235.98935516011767, 234.15218495679045, 236.1074878463782],
    [100.0, -669.0835754253096, -666.7807405195375, 664.9431134221568, 667.2454483273716],
    [1000.0, -21084.843522026385, -21081.389636481388, 21079.55176732064, 21083.00563705425],
    [25000.0, -2635235.1806435753, -2635230.11732796, 2635228.2794509567, 2635233.3427664456],
];

// Far negative z: phase-free modulus invariants.
// Columns: z, Ai^2+Bi^2, Ai'^2+Bi'^2.
#[rustfmt::skip]
pub const AIRY_MODULUS_REFERENCE: [[f64; 3]; 7] = [
    [-26.5, 0.06183345939039842, 1.6386196872395202],
    [-30.0, 0.05811483204356286, 1.7434691730188132],
    [-50.0, 0.04501575953971018, 2.2507947291806465],
    [-100.0, 0.03183098364480505, 3.1830995581386614],
    [-1000.0, 0.010065842419324619, 10.06584242309931],
    [-100000.0, 0.0010065842420897404, 100.6584242089741],
    [-1000000.0, 0.00031830988618379065, 318.3098861837907],
];
