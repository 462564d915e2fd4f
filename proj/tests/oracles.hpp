// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.
#pragma once

#include <array>
#include <complex>

namespace oracle {

using C = std::complex<double>;

inline constexpr double kE2_i_2i = -0.030740328530378129;
inline constexpr double kE1_i_2i = -0.11031780007632580;
inline constexpr double kG_i_2i = -0.17484957628302989;
inline constexpr double kG1_i_4i = -0.0017229515344105169;
inline constexpr double kP1_i_2 = -0.015915494309189534;
inline constexpr double kH_halfi_w2 = -0.34969915256605978;
inline constexpr double kU_indicator_atom3i = 0.38968219992367420;
inline constexpr double kMeasureNorm_two_atoms = 0.43650793650793651;

struct GreenCase { C z; C zeta; int m; double value; };
inline const std::array<GreenCase, 48> kGreenTable{{
    {{0.35194326065119103, 0.31344069750554182}, {286.83142996396134, 2.3253686264125761}, 4, 0.000000000000000014758737047123803},
    {{0.014291859859757942, 0.000034666939665116716}, {-11.793649465703394, 11.877418681104215}, 0, -0.00000046725502006344088},
    {{-1.1505609502292506, 0.11079908003944774}, {4.3025894875622335, 0.026916794348877671}, 3, 0.0000029102019026009795},
    {{0.056938487939520534, 0.000036622060704230579}, {-52.011985689985636, 0.43462808624891153}, 8, -0.000000000000000000000000000000034680135662684411},
    {{-20.494246634860378, 5.6110254246397764}, {-9.6887288620740115, 1.2528641022170426}, 0, -0.014980566253047946},
    {{-0.28388774975500075, 0.00061422801597168478}, {-49.624467627679373, 0.39683507077026192}, 0, -0.000000031867882316585318},
    {{-0.72682482544291060, 0.0050941031973403376}, {10.142845055014281, 0.096420530022845549}, 0, -0.0000013231844973802985},
    {{-0.0074936881454903776, 0.0083285449879124812}, {559.37908534800090, 4.1709558868057659}, 1, 0.00000000000094669127389491448},
    {{-0.024549889187527121, 0.00024122991119156147}, {-5.1651467801410611, 0.83863168113311326}, 0, -0.0000023736579181423176},
    {{315.30809499295032, 2.2340240459567493}, {-3.6343393245734048, 0.032145576836891676}, 3, 38.770121121643629},
    {{0.11607446749188979, 0.24877126104824929}, {-121.23436473012713, 0.50986750479718679}, 8, 0.0000000000000000000000000014733804237905904},
    {{1.3414938849057376, 0.0011888499030549434}, {205.97642559251736, 1.7637496642324475}, 3, -0.000000000000017520295876338838},
    {{33.213249273990670, 0.30648919235958261}, {26.708087373184419, 0.081638202226697515}, 4, -0.000011154087048688368},
    {{-78.567941819013456, 48.097093751606685}, {4.6645941504129915, 0.018159056392125710}, 4, -143.59048020140015},
    {{-4.3129283882336340, 0.027062146760590568}, {209.49626422442930, 93.817439886200688}, 2, -0.000000012382670393791001},
    {{276.85838382334998, 333.02427109847298}, {-201.54178457764942, 98.113113187210132}, 4, 0.46894956434827477},
    {{79.143871657112626, 200.61606839716725}, {149.42238716376329, 0.43614710124107042}, 0, -0.00061637705477269347},
    {{196.19656586791808, 455.60950190786559}, {193.54734256788132, 0.30461281641011906}, 0, -0.00021280944923639311},
    {{15.439796260282199, 281.69921032414720}, {624.76976737302243, 2.2254036970152398}, 1, 0.000068403520204895116},
    {{375.18648635613920, 0.65682224549944890}, {133.39760608213282, 1.0241601120047756}, 8, 0.19345100924643288},
    {{17.845910623088695, 26.193353690353874}, {-55.892745163562893, 0.47168818997779854}, 3, -0.000078697056437707381},
    {{-483.16954273890622, 4.8243951026512075}, {3.2445378695125635, 0.077982640435284953}, 0, -0.00000050609951712587435},
    {{0.0060050883923182009, 0.040167041933991045}, {-956.41685942328320, 1.6541249107158076}, 1, 0.00000000000029036904460924703},
    {{-2.9988758431250799, 0.012340303108381315}, {34.258533203932068, 53.925931876528701}, 8, -0.00000000000000057572074746650131},
    {{-85.302428520073292, 0.48318985636953093}, {-26.633783909376355, 235.76426751002234}, 4, -0.000010352564282324982},
    {{-0.33385295543057258, 0.0017642623956565827}, {24.928763171772147, 0.0041963596558584441}, 4, -0.00000000000000060023519620512103},
    {{971.09243724012219, 3.8075135195078458}, {-2.9522791720208263, 0.016495087565956641}, 2, -1.5065262804558188},
    {{-4.1160764811916133, 0.039497221929000244}, {-3.3133472897220315, 0.0070846001965744207}, 1, -0.00012976953409574577},
    {{42.020616399676555, 0.11017785279904865}, {1.5280279783845532, 23.659826904968398}, 4, -0.0052246185573898279},
    {{0.041776946115788513, 0.000092034039889223591}, {435.01826491186620, 1.5157927316084669}, 3, -0.00000000000000000000083137067050186784},
    {{-630.51761232161084, 3.4478639291219353}, {-1.0251764069523206, 12.675933090234846}, 2, 0.77356307797559137},
    {{0.017425215116908394, 0.000040324481269292602}, {-5.6721642828324788, 0.0075191995314448298}, 2, -0.000000000000084585095425402782},
    {{-414.71668496114415, 1.2017118437636027}, {1.1773105930578454, 3.6404546717357364}, 1, 0.095117145406909626},
    {{-0.87071911563534665, 0.0060594244982458299}, {10.066271990368753, 0.075788887160180285}, 3, 0.0000000033677545441877938},
    {{301.28099336590628, 15.894717873525591}, {188.49952299681499, 1.4476060259062322}, 4, 0.0052345007753489705},
    {{-16.780506886102817, 5.9724545845509605}, {4.5400800120017761, 0.78553406761782363}, 3, 2.1394605671840097},
    {{-0.40872941305480098, 0.00046321867786963504}, {-6.6348831046980186, 0.058635693351442780}, 3, -0.00000000019884138824333528},
    {{2.1230063214264376, 0.0064915472116401666}, {-158.82126668543143, 0.86024477871552518}, 3, 0.00000000000066209797627599790},
    {{-36.737655516085375, 30.582946915507566}, {106.30017661055187, 0.92232332717745014}, 0, -0.00041964426934903059},
    {{0.021855929977446523, 0.00019088874466397640}, {12.282234827763368, 4.9141610294915985}, 2, -0.000000000011421559312908499},
    {{60.844993712555016, 119.15057099381777}, {-10.093847647995148, 0.098844763816365394}, 3, -1.5226579190638630},
    {{0.013658866793484612, 0.0068510128928140328}, {1.9325344907004756, 7.8618114673914148}, 1, -0.00000021016543864919001},
    {{-4.2450129985215916, 0.027036601797692513}, {-83.385074027124091, 0.39969346414608903}, 8, -0.00000000000000021273599759621653},
    {{47.246769740919426, 0.21495306780808304}, {29.631385639040136, 0.093158534228815898}, 2, 0.0000098718198750713221},
    {{998.97742760433994, 3.2227859203745806}, {2.4152972139039850, 0.0070124841927412711}, 2, 1.0212798997404347},
    {{539.78643755351777, 3.5152154366381563}, {9.9695060912277320, 0.085992605445048942}, 2, 0.10578416156166321},
    {{57.504587276300683, 75.983644605619219}, {91.940354040591245, 47.129888100517405}, 0, -0.16643622487991260},
    {{-0.38409048601784840, 0.82177026834681066}, {-1.0851545139494227, 0.87991707430270349}, 3, 0.0085996581305436289},
}};

struct PoissonCase { C z; double xi; int m; double value; };
inline const std::array<PoissonCase, 48> kPoissonTable{{
    {{731.48867227154142, 215.38998998060146}, 28.756762017690498, 4, -5145.6452059347843},
    {{-2.1974148548169641, 0.0052185046897192207}, 91.731464571042395, 4, 0.00000000000031592359482569515},
    {{1.2672912428977310, 0.29438869194629524}, 41.677096359469402, 1, 0.0000034337456479229620},
    {{-172.16603101959757, 141.56453647628675}, 9.2441923630702263, 1, -0.52645976570719155},
    {{-327.38642009787117, 3.2352607555013977}, -574.29594653507604, 2, 0.000010206866740150467},
    {{0.15437605815666841, 2.8899425720050980}, -9.7474091858891594, 2, -0.00072934517380284034},
    {{-231.86816434379665, 948.77916560531185}, -628.59319234785733, 0, 0.00028556505066600852},
    {{-23.530615746566607, 64.027115149226688}, -113.90290775444308, 2, -0.00055847052954672989},
    {{-249.45839413891872, 61.020461700286845}, -1.0439417031816929, 3, -3000721.5831146426},
    {{18.478505705978947, 1.1449137784250252}, 50.582506153594736, 0, 0.00035314463120921924},
    {{-862.04232030176217, 145.04091617885928}, 67.160642565168743, 2, 0.25257390951034263},
    {{-24.164439812256049, 0.13586200803363707}, -613.19083765678215, 0, 0.00000012464607749157038},
    {{-0.031405552719480929, 0.00020203238803736786}, 14.246255035551535, 2, 0.0000000000046059748478808680},
    {{-0.12754700748453701, 0.077833820629054182}, 21.560300962576914, 2, 0.0000000048735738925425885},
    {{-3.7050593047328118, 0.033707229311394783}, 4.9454234727629691, 2, 0.00036201726039265007},
    {{-0.031695235359594516, 0.00030225907578078945}, 71.531910203748041, 8, 0.00000000000000000000000000000000025109794631317471},
    {{0.37285756150195037, 0.54533399387912673}, -1.8074153213723145, 4, -0.00091906631476311519},
    {{0.010932471841205020, 0.000053666609281255593}, -7.7693336212710600, 4, 0.0000000000000000055378537043853226},
    {{0.28265204046085285, 0.0016681993188802369}, -10.038484543350258, 3, -0.00000000045448136053269373},
    {{-93.560163482375884, 0.66448706729358809}, -120.54051933200154, 4, 0.00019969851315388419},
    {{0.51855069290915035, 0.0027393947752756167}, 11.129764634529009, 8, 0.0000000000000014831154651898431},
    {{-87.128746507603836, 0.82014466924647311}, -2.7976139086128136, 1, -0.033318609400104326},
    {{0.085884630734998205, 0.10768791936545026}, -3.7001245588789562, 2, 0.0000019918383772521159},
    {{90.238248233533795, 0.62995236658914200}, 155.45525935428026, 0, 0.000047140646860161216},
    {{5.7554249398376127, 5.5111455034184997}, -26.882524743474111, 1, -0.00082629200715953743},
    {{0.16758230467087892, 0.00093541406286055473}, -6.2197272599442570, 4, 0.000000000019644934909970995},
    {{45.988651376558508, 0.090514537256729380}, -99.968574949806666, 4, 0.00000041431181514590947},
    {{0.034013094299359385, 0.00025640709653915146}, 32.484614734199440, 3, 0.00000000000000035557729945451219},
    {{-4.8551000790678307, 0.047977101077872446}, 27.839955627057055, 1, -0.0000054173908550469532},
    {{-965.90515911409921, 7.7606392395965065}, -9.5259620484614995, 8, -24197299544053.560},
    {{0.37689153335278602, 0.00020792530871300381}, 18.312330636083679, 4, 0.00000000000018154489195708498},
    {{-982.86301296384499, 1.8916643861212095}, 1.1118184066924963, 1, -0.48710876125343657},
    {{-1.6827935157653191, 0.0017486397830075195}, 923.57697069912831, 2, 0.0000000000000064831625541164472},
    {{-0.016604749183928572, 0.000033480000489358728}, -185.90741027293993, 2, 0.0000000000000000073805003842849354},
    {{16.557484888995550, 0.13776715394013195}, -6.6599915250854895, 3, -0.014323088449411656},
    {{-0.070096360780623035, 0.048718322417786744}, 296.14749466028212, 2, 0.000000000000024928202543742581},
    {{0.92852025777790892, 0.22439358546023341}, -6.8254855401769889, 3, -0.000012520579516369015},
    {{583.37239931712895, 5.6458668400068923}, 194.79117076691026, 2, -0.00031915705463694757},
    {{-0.58378869307463044, 0.0038508943650363628}, 38.336750695561769, 4, 0.00000000000022019474850329628},
    {{-2.4436536590408213, 1.7006378613245172}, 21.031001475574669, 4, 0.00000013305295315209249},
    {{-0.78815691418716338, 4.2355560832756458}, -1.6515746852029007, 0, 0.072153527832944779},
    {{0.23364266768679856, 0.0012576424161205118}, 72.995151734029221, 2, 0.0000000000023190467184013360},
    {{0.011207251368209402, 0.000097711684547452144}, 84.324914585106910, 8, 0.0000000000000000000000000000000000000038302654630263366},
    {{1.5652762159422327, 1.0089266391131544}, -85.934058671064406, 3, -0.00000000060952587144448629},
    {{0.10506958571948583, 0.16154026434899854}, 13.527102351308960, 8, 0.00000000000000000025728276125065676},
    {{-19.133228713547894, 0.18631868265935375}, 120.00420030750637, 4, 0.000000011158812452190792},
    {{565.81138102722218, 4.6445789219374811}, 4.1438968449689124, 4, -881430.92178671517},
    {{-1.6286800018455838, 2.4295556922030226}, -339.97333947881503, 8, 0.00000000000000000000013627138977024846},
}};

struct PotentialCase { C z; double v; };
inline const std::array<PotentialCase, 5> kPower15Order1{{
    {{70.710678118654755, 70.710678118654755}, -451.16446853048640},
    {{707.10678118654755, 707.10678118654755}, -16213.807056468572},
    {{0.0, 100.00000000000000}, -1286.8896078995788},
    {{8.6602540378443873, 5.0000000000000000}, 6.3661977236758162},
    {{1.6209069176044191, 2.5244129544236897}, -1.6013923086452898},
}};

}  // namespace oracle
