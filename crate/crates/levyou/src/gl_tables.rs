// Gauss-Legendre nodes and weights on [-1, 1], generated with mpmath at
// 40-digit working precision and truncated to 17 significant digits.

pub(crate) const GL16_NODES: [f64; 16] = [
    -0.98940093499164993,
    -0.94457502307323258,
    -0.86563120238783174,
    -0.75540440835500303,
    -0.61787624440264375,
    -0.45801677765722739,
    -0.28160355077925891,
    -0.09501250983763744,
    0.09501250983763744,
    0.28160355077925891,
    0.45801677765722739,
    0.61787624440264375,
    0.75540440835500303,
    0.86563120238783174,
    0.94457502307323258,
    0.98940093499164993,
];

pub(crate) const GL16_WEIGHTS: [f64; 16] = [
    0.027152459411754095,
    0.062253523938647893,
    0.095158511682492785,
    0.12462897125553387,
    0.14959598881657673,
    0.16915651939500254,
    0.18260341504492359,
    0.1894506104550685,
    0.1894506104550685,
    0.18260341504492359,
    0.16915651939500254,
    0.14959598881657673,
    0.12462897125553387,
    0.095158511682492785,
    0.062253523938647893,
    0.027152459411754095,
];

pub(crate) const GL32_NODES: [f64; 32] = [
    -0.99726386184948156,
    -0.98561151154526834,
    -0.96476225558750643,
    -0.93490607593773969,
    -0.89632115576605212,
    -0.84936761373256997,
    -0.79448379596794241,
    -0.73218211874028968,
    -0.6630442669302152,
    -0.58771575724076233,
    -0.50689990893222939,
    -0.42135127613063535,
    -0.33186860228212765,
    -0.23928736225213707,
    -0.14447196158279649,
    -0.048307665687738316,
    0.048307665687738316,
    0.14447196158279649,
    0.23928736225213707,
    0.33186860228212765,
    0.42135127613063535,
    0.50689990893222939,
    0.58771575724076233,
    0.6630442669302152,
    0.73218211874028968,
    0.79448379596794241,
    0.84936761373256997,
    0.89632115576605212,
    0.93490607593773969,
    0.96476225558750643,
    0.98561151154526834,
    0.99726386184948156,
];

pub(crate) const GL32_WEIGHTS: [f64; 32] = [
    0.0070186100094700966,
    0.016274394730905671,
    0.025392065309262059,
    0.034273862913021433,
    0.042835898022226681,
    0.050998059262376176,
    0.058684093478535547,
    0.065822222776361847,
    0.072345794108848506,
    0.078193895787070306,
    0.083311924226946755,
    0.087652093004403811,
    0.091173878695763885,
    0.093844399080804566,
    0.095638720079274859,
    0.096540088514727801,
    0.096540088514727801,
    0.095638720079274859,
    0.093844399080804566,
    0.091173878695763885,
    0.087652093004403811,
    0.083311924226946755,
    0.078193895787070306,
    0.072345794108848506,
    0.065822222776361847,
    0.058684093478535547,
    0.050998059262376176,
    0.042835898022226681,
    0.034273862913021433,
    0.025392065309262059,
    0.016274394730905671,
    0.0070186100094700966,
];

pub(crate) const GL64_NODES: [f64; 64] = [
    -0.99930504173577214,
    -0.99634011677195528,
    -0.99101337147674432,
    -0.98333625388462596,
    -0.97332682778991096,
    -0.96100879965205372,
    -0.94641137485840282,
    -0.92956917213193958,
    -0.91052213707850281,
    -0.88931544599511411,
    -0.86599939815409282,
    -0.84062929625258036,
    -0.81326531512279756,
    -0.78397235894334141,
    -0.7528199072605319,
    -0.71988185017161083,
    -0.68523631305423324,
    -0.64896547125465734,
    -0.61115535517239325,
    -0.57189564620263403,
    -0.53127946401989455,
    -0.48940314570705296,
    -0.44636601725346409,
    -0.4022701579639916,
    -0.35722015833766812,
    -0.31132287199021096,
    -0.26468716220876742,
    -0.21742364374000708,
    -0.16964442042399282,
    -0.12146281929612055,
    -0.072993121787799039,
    -0.024350292663424433,
    0.024350292663424433,
    0.072993121787799039,
    0.12146281929612055,
    0.16964442042399282,
    0.21742364374000708,
    0.26468716220876742,
    0.31132287199021096,
    0.35722015833766812,
    0.4022701579639916,
    0.44636601725346409,
    0.48940314570705296,
    0.53127946401989455,
    0.57189564620263403,
    0.61115535517239325,
    0.64896547125465734,
    0.68523631305423324,
    0.71988185017161083,
    0.7528199072605319,
    0.78397235894334141,
    0.81326531512279756,
    0.84062929625258036,
    0.86599939815409282,
    0.88931544599511411,
    0.91052213707850281,
    0.92956917213193958,
    0.94641137485840282,
    0.96100879965205372,
    0.97332682778991096,
    0.98333625388462596,
    0.99101337147674432,
    0.99634011677195528,
    0.99930504173577214,
];

pub(crate) const GL64_WEIGHTS: [f64; 64] = [
    0.0017832807216964329,
    0.0041470332605624676,
    0.0065044579689783629,
    0.0088467598263639477,
    0.011168139460131129,
    0.013463047896718643,
    0.015726030476024719,
    0.017951715775697343,
    0.020134823153530209,
    0.022270173808383254,
    0.024352702568710873,
    0.026377469715054659,
    0.028339672614259483,
    0.030234657072402479,
    0.032057928354851554,
    0.033805161837141609,
    0.035472213256882384,
    0.037055128540240046,
    0.038550153178615629,
    0.039953741132720341,
    0.041262563242623529,
    0.042473515123653589,
    0.043583724529323453,
    0.044590558163756563,
    0.045491627927418144,
    0.046284796581314417,
    0.046968182816210017,
    0.047540165714830309,
    0.047999388596458308,
    0.048344762234802957,
    0.048575467441503427,
    0.04869095700913972,
    0.04869095700913972,
    0.048575467441503427,
    0.048344762234802957,
    0.047999388596458308,
    0.047540165714830309,
    0.046968182816210017,
    0.046284796581314417,
    0.045491627927418144,
    0.044590558163756563,
    0.043583724529323453,
    0.042473515123653589,
    0.041262563242623529,
    0.039953741132720341,
    0.038550153178615629,
    0.037055128540240046,
    0.035472213256882384,
    0.033805161837141609,
    0.032057928354851554,
    0.030234657072402479,
    0.028339672614259483,
    0.026377469715054659,
    0.024352702568710873,
    0.022270173808383254,
    0.020134823153530209,
    0.017951715775697343,
    0.015726030476024719,
    0.013463047896718643,
    0.011168139460131129,
    0.0088467598263639477,
    0.0065044579689783629,
    0.0041470332605624676,
    0.0017832807216964329,
];

pub(crate) const GL128_NODES: [f64; 128] = [
    -0.99982488794713191,
    -0.9990774599773759,
    -0.99773324862551402,
    -0.99579275853498119,
    -0.99325711290021294,
    -0.99012781849173438,
    -0.98640674272458621,
    -0.98209610843571854,
    -0.97719849146390739,
    -0.97171681874713658,
    -0.96565436643196527,
    -0.95901475785369993,
    -0.95180196134126439,
    -0.94402028783022018,
    -0.93567438827791638,
    -0.92676925087894784,
    -0.91731019808096054,
    -0.90730288340175681,
    -0.89675328804915818,
    -0.88566771734539722,
    -0.8740527969580318,
    -0.86191546893954846,
    -0.84926298757796897,
    -0.83610291506090685,
    -0.82244311695564384,
    -0.80829175750791366,
    -0.79365729476219329,
    -0.77854847550641197,
    -0.76297433004409472,
    -0.74694416679706198,
    -0.73046756674190881,
    -0.71355437768358741,
    -0.69621470836951433,
    -0.67845892244771926,
    -0.66029763227264605,
    -0.64174169256230756,
    -0.62280219391058491,
    -0.60349045615854862,
    -0.58381802162876309,
    -0.56379664822661808,
    -0.54343830241281036,
    -0.52275515205117548,
    -0.50175955913614446,
    -0.48046407240417203,
    -0.4588814198335522,
    -0.43702450103710416,
    -0.41490637955227502,
    -0.39254027503326744,
    -0.36993955534985903,
    -0.34711772859763551,
    -0.32408843502441338,
    -0.3008654388776772,
    -0.2774626201779044,
    -0.25389396642269432,
    -0.23017356422665999,
    -0.20631559090207922,
    -0.18233430598533718,
    -0.15824404271422493,
    -0.13405919946118779,
    -0.10979423112764375,
    -0.085463640504515499,
    -0.061081969604139568,
    -0.036663790968733493,
    -0.012223698960615764,
    0.012223698960615764,
    0.036663790968733493,
    0.061081969604139568,
    0.085463640504515499,
    0.10979423112764375,
    0.13405919946118779,
    0.15824404271422493,
    0.18233430598533718,
    0.20631559090207922,
    0.23017356422665999,
    0.25389396642269432,
    0.2774626201779044,
    0.3008654388776772,
    0.32408843502441338,
    0.34711772859763551,
    0.36993955534985903,
    0.39254027503326744,
    0.41490637955227502,
    0.43702450103710416,
    0.4588814198335522,
    0.48046407240417203,
    0.50175955913614446,
    0.52275515205117548,
    0.54343830241281036,
    0.56379664822661808,
    0.58381802162876309,
    0.60349045615854862,
    0.62280219391058491,
    0.64174169256230756,
    0.66029763227264605,
    0.67845892244771926,
    0.69621470836951433,
    0.71355437768358741,
    0.73046756674190881,
    0.74694416679706198,
    0.76297433004409472,
    0.77854847550641197,
    0.79365729476219329,
    0.80829175750791366,
    0.82244311695564384,
    0.83610291506090685,
    0.84926298757796897,
    0.86191546893954846,
    0.8740527969580318,
    0.88566771734539722,
    0.89675328804915818,
    0.90730288340175681,
    0.91731019808096054,
    0.92676925087894784,
    0.93567438827791638,
    0.94402028783022018,
    0.95180196134126439,
    0.95901475785369993,
    0.96565436643196527,
    0.97171681874713658,
    0.97719849146390739,
    0.98209610843571854,
    0.98640674272458621,
    0.99012781849173438,
    0.99325711290021294,
    0.99579275853498119,
    0.99773324862551402,
    0.9990774599773759,
    0.99982488794713191,
];

pub(crate) const GL128_WEIGHTS: [f64; 128] = [
    0.00044938096029209038,
    0.0010458126793403488,
    0.0016425030186690295,
    0.0022382884309626187,
    0.0028327514714579911,
    0.0034255260409102158,
    0.0040162549837386423,
    0.0046045842567029551,
    0.0051901618326763302,
    0.0057726375428656986,
    0.0063516631617071888,
    0.0069268925668988136,
    0.0074979819256347287,
    0.008064589890486058,
    0.0086263777986167497,
    0.0091830098716608743,
    0.0097341534150068059,
    0.010279479015832157,
    0.010818660739503076,
    0.011351376324080417,
    0.01187730737274028,
    0.012396139543950923,
    0.012907562739267347,
    0.013411271288616332,
    0.013906964132951985,
    0.014394345004166846,
    0.014873122602147314,
    0.015343010768865144,
    0.015803728659399347,
    0.016255000909785187,
    0.016696557801589205,
    0.017128135423111377,
    0.017549475827117705,
    0.017960327185008686,
    0.018360443937331343,
    0.018749586940544709,
    0.019127523609950945,
    0.019494028058706603,
    0.019848881232830862,
    0.020191871042130041,
    0.020522792486960069,
    0.020841447780751149,
    0.021147646468221349,
    0.02144120553920846,
    0.021721949538052075,
    0.021989710668460491,
    0.022244328893799765,
    0.022485652032744967,
    0.022713535850236461,
    0.022927844143686847,
    0.023128448824387028,
    0.02331522999406276,
    0.023488076016535913,
    0.023646883584447615,
    0.023791557781003401,
    0.023922012136703456,
    0.024038168681024053,
    0.024139957989019285,
    0.024227319222815248,
    0.024300200167971865,
    0.024358557264690626,
    0.024402355633849582,
    0.024431569097850045,
    0.024446180196262518,
    0.024446180196262518,
    0.024431569097850045,
    0.024402355633849582,
    0.024358557264690626,
    0.024300200167971865,
    0.024227319222815248,
    0.024139957989019285,
    0.024038168681024053,
    0.023922012136703456,
    0.023791557781003401,
    0.023646883584447615,
    0.023488076016535913,
    0.02331522999406276,
    0.023128448824387028,
    0.022927844143686847,
    0.022713535850236461,
    0.022485652032744967,
    0.022244328893799765,
    0.021989710668460491,
    0.021721949538052075,
    0.02144120553920846,
    0.021147646468221349,
    0.020841447780751149,
    0.020522792486960069,
    0.020191871042130041,
    0.019848881232830862,
    0.019494028058706603,
    0.019127523609950945,
    0.018749586940544709,
    0.018360443937331343,
    0.017960327185008686,
    0.017549475827117705,
    0.017128135423111377,
    0.016696557801589205,
    0.016255000909785187,
    0.015803728659399347,
    0.015343010768865144,
    0.014873122602147314,
    0.014394345004166846,
    0.013906964132951985,
    0.013411271288616332,
    0.012907562739267347,
    0.012396139543950923,
    0.01187730737274028,
    0.011351376324080417,
    0.010818660739503076,
    0.010279479015832157,
    0.0097341534150068059,
    0.0091830098716608743,
    0.0086263777986167497,
    0.008064589890486058,
    0.0074979819256347287,
    0.0069268925668988136,
    0.0063516631617071888,
    0.0057726375428656986,
    0.0051901618326763302,
    0.0046045842567029551,
    0.0040162549837386423,
    0.0034255260409102158,
    0.0028327514714579911,
    0.0022382884309626187,
    0.0016425030186690295,
    0.0010458126793403488,
    0.00044938096029209038,
];

