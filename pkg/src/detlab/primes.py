"""Fixed pool of word-size primes for modular determinants.

The 4096 largest primes below 2**31, in descending order. The list is
embedded verbatim so that every platform consumes the same moduli in the
same order; ``tests/test_primes.py`` re-derives it independently.
"""

PRIME_POOL: tuple[int, ...] = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
    2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
    2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
    2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
    2147482591, 2147482583, 2147482577, 2147482507, 2147482501, 2147482481,
    2147482417, 2147482409, 2147482367, 2147482361, 2147482349, 2147482343,
    2147482327, 2147482291, 2147482273, 2147482237, 2147482231, 2147482223,
    2147482121, 2147482093, 2147482091, 2147482081, 2147482063, 2147482021,
    2147481997, 2147481967, 2147481949, 2147481937, 2147481907, 2147481901,
    2147481899, 2147481893, 2147481883, 2147481863, 2147481827, 2147481811,
    2147481797, 2147481793, 2147481673, 2147481629, 2147481571, 2147481563,
    2147481529, 2147481509, 2147481499, 2147481491, 2147481487, 2147481373,
    2147481367, 2147481359, 2147481353, 2147481337, 2147481317, 2147481311,
    2147481283, 2147481269, 2147481263, 2147481247, 2147481209, 2147481199,
    2147481179, 2147481173, 2147481151, 2147481143, 2147481139, 2147481071,
    2147481053, 2147481031, 2147481019, 2147480989, 2147480971, 2147480969,
    2147480957, 2147480941, 2147480927, 2147480921, 2147480899, 2147480897,
    2147480893, 2147480849, 2147480843, 2147480837, 2147480791, 2147480747,
    2147480743, 2147480723, 2147480707, 2147480683, 2147480677, 2147480651,
    2147480641, 2147480623, 2147480611, 2147480591, 2147480551, 2147480527,
    2147480519, 2147480507, 2147480471, 2147480459, 2147480437, 2147480429,
    2147480369, 2147480327, 2147480311, 2147480299, 2147480297, 2147480227,
    2147480219, 2147480207, 2147480197, 2147480161, 2147480039, 2147480011,
    2147480009, 2147479991, 2147479937, 2147479907, 2147479897, 2147479891,
    2147479879, 2147479823, 2147479819, 2147479787, 2147479781, 2147479757,
    2147479753, 2147479751, 2147479681, 2147479657, 2147479643, 2147479637,
    2147479619, 2147479601, 2147479589, 2147479573, 2147479549, 2147479547,
    2147479531, 2147479517, 2147479513, 2147479507, 2147479489, 2147479447,
    2147479421, 2147479403, 2147479381, 2147479361, 2147479349, 2147479339,
    2147479307, 2147479273, 2147479259, 2147479231, 2147479189, 2147479171,
    2147479133, 2147479129, 2147479121, 2147479097, 2147479091, 2147479079,
    2147479063, 2147479057, 2147479031, 2147479013, 2147478997, 2147478967,
    2147478961, 2147478959, 2147478937, 2147478919, 2147478911, 2147478899,
    2147478889, 2147478863, 2147478859, 2147478821, 2147478791, 2147478763,
    2147478733, 2147478731, 2147478727, 2147478721, 2147478719, 2147478703,
    2147478701, 2147478673, 2147478661, 2147478659, 2147478653, 2147478649,
    2147478647, 2147478611, 2147478601, 2147478581, 2147478569, 2147478563,
    2147478521, 2147478517, 2147478503, 2147478497, 2147478491, 2147478481,
    2147478461, 2147478373, 2147478349, 2147478331, 2147478299, 2147478293,
    2147478259, 2147478253, 2147478149, 2147478133, 2147478127, 2147478089,
    2147478083, 2147478079, 2147478049, 2147478017, 2147478013, 2147477989,
    2147477953, 2147477933, 2147477881, 2147477879, 2147477873, 2147477861,
    2147477851, 2147477833, 2147477809, 2147477807, 2147477737, 2147477701,
    2147477699, 2147477687, 2147477681, 2147477627, 2147477599, 2147477533,
    2147477531, 2147477513, 2147477503, 2147477473, 2147477467, 2147477443,
    2147477419, 2147477399, 2147477393, 2147477323, 2147477273, 2147477249,
    2147477237, 2147477209, 2147477207, 2147477203, 2147477201, 2147477191,
    2147477159, 2147477113, 2147477107, 2147477093, 2147477063, 2147477029,
    2147477021, 2147476979, 2147476963, 2147476951, 2147476943, 2147476937,
    2147476931, 2147476927, 2147476897, 2147476871, 2147476841, 2147476823,
    2147476819, 2147476789, 2147476777, 2147476769, 2147476763, 2147476741,
    2147476739, 2147476699, 2147476693, 2147476687, 2147476663, 2147476649,
    2147476619, 2147476607, 2147476543, 2147476519, 2147476517, 2147476417,
    2147476399, 2147476381, 2147476367, 2147476327, 2147476321, 2147476291,
    2147476249, 2147476211, 2147476183, 2147476169, 2147476141, 2147476139,
    2147476127, 2147476109, 2147476087, 2147476073, 2147476031, 2147475997,
    2147475977, 2147475973, 2147475971, 2147475929, 2147475899, 2147475871,
    2147475859, 2147475851, 2147475829, 2147475797, 2147475791, 2147475787,
    2147475739, 2147475721, 2147475713, 2147475691, 2147475653, 2147475641,
    2147475601, 2147475593, 2147475587, 2147475563, 2147475559, 2147475553,
    2147475541, 2147475521, 2147475509, 2147475503, 2147475497, 2147475487,
    2147475481, 2147475439, 2147475413, 2147475401, 2147475397, 2147475373,
    2147475367, 2147475349, 2147475347, 2147475331, 2147475277, 2147475269,
    2147475257, 2147475251, 2147475233, 2147475229, 2147475221, 2147475203,
    2147475193, 2147475181, 2147475179, 2147475149, 2147475107, 2147475103,
    2147475061, 2147475047, 2147474963, 2147474951, 2147474947, 2147474929,
    2147474921, 2147474891, 2147474887, 2147474881, 2147474851, 2147474843,
    2147474837, 2147474831, 2147474809, 2147474807, 2147474803, 2147474789,
    2147474717, 2147474711, 2147474657, 2147474627, 2147474597, 2147474551,
    2147474531, 2147474519, 2147474513, 2147474491, 2147474479, 2147474477,
    2147474393, 2147474383, 2147474359, 2147474279, 2147474239, 2147474213,
    2147474201, 2147474159, 2147474149, 2147474123, 2147474113, 2147474093,
    2147474071, 2147474029, 2147474027, 2147474009, 2147473963, 2147473921,
    2147473897, 2147473891, 2147473849, 2147473837, 2147473787, 2147473781,
    2147473763, 2147473733, 2147473703, 2147473697, 2147473579, 2147473567,
    2147473553, 2147473487, 2147473483, 2147473477, 2147473469, 2147473429,
    2147473409, 2147473373, 2147473369, 2147473351, 2147473331, 2147473301,
    2147473297, 2147473291, 2147473283, 2147473267, 2147473241, 2147473231,
    2147473217, 2147473187, 2147473151, 2147473127, 2147473121, 2147473117,
    2147473061, 2147473049, 2147472959, 2147472923, 2147472917, 2147472893,
    2147472883, 2147472863, 2147472797, 2147472787, 2147472757, 2147472751,
    2147472713, 2147472697, 2147472689, 2147472683, 2147472659, 2147472617,
    2147472611, 2147472601, 2147472557, 2147472499, 2147472491, 2147472469,
    2147472449, 2147472443, 2147472421, 2147472413, 2147472377, 2147472373,
    2147472343, 2147472311, 2147472289, 2147472263, 2147472259, 2147472251,
    2147472221, 2147472199, 2147472161, 2147472143, 2147472137, 2147472133,
    2147472109, 2147472101, 2147472091, 2147472071, 2147472053, 2147472043,
    2147472037, 2147472023, 2147471993, 2147471951, 2147471939, 2147471933,
    2147471891, 2147471881, 2147471863, 2147471839, 2147471831, 2147471759,
    2147471741, 2147471707, 2147471687, 2147471681, 2147471647, 2147471639,
    2147471629, 2147471621, 2147471611, 2147471597, 2147471581, 2147471539,
    2147471519, 2147471419, 2147471387, 2147471351, 2147471327, 2147471303,
    2147471273, 2147471251, 2147471243, 2147471237, 2147471233, 2147471197,
    2147471177, 2147471173, 2147471159, 2147471147, 2147471111, 2147471089,
    2147471057, 2147471017, 2147470987, 2147470939, 2147470903, 2147470891,
    2147470859, 2147470837, 2147470823, 2147470789, 2147470771, 2147470769,
    2147470751, 2147470733, 2147470727, 2147470723, 2147470679, 2147470673,
    2147470643, 2147470627, 2147470603, 2147470597, 2147470579, 2147470553,
    2147470531, 2147470529, 2147470513, 2147470511, 2147470453, 2147470427,
    2147470361, 2147470333, 2147470327, 2147470313, 2147470249, 2147470229,
    2147470211, 2147470183, 2147470177, 2147470147, 2147470139, 2147470123,
    2147470111, 2147470081, 2147470067, 2147470057, 2147470043, 2147470027,
    2147470019, 2147470007, 2147469983, 2147469949, 2147469943, 2147469917,
    2147469881, 2147469829, 2147469823, 2147469817, 2147469781, 2147469703,
    2147469679, 2147469659, 2147469637, 2147469629, 2147469619, 2147469593,
    2147469553, 2147469521, 2147469491, 2147469463, 2147469449, 2147469421,
    2147469419, 2147469347, 2147469329, 2147469283, 2147469271, 2147469263,
    2147469239, 2147469229, 2147469187, 2147469179, 2147469173, 2147469157,
    2147469133, 2147469131, 2147469113, 2147469101, 2147469089, 2147469073,
    2147469067, 2147469047, 2147469041, 2147469017, 2147469007, 2147469001,
    2147468993, 2147468987, 2147468971, 2147468933, 2147468923, 2147468909,
    2147468887, 2147468881, 2147468861, 2147468833, 2147468809, 2147468803,
    2147468801, 2147468783, 2147468779, 2147468773, 2147468753, 2147468717,
    2147468651, 2147468639, 2147468621, 2147468599, 2147468591, 2147468563,
    2147468537, 2147468507, 2147468503, 2147468497, 2147468443, 2147468431,
    2147468429, 2147468423, 2147468417, 2147468341, 2147468317, 2147468291,
    2147468269, 2147468249, 2147468233, 2147468231, 2147468189, 2147468173,
    2147468131, 2147468119, 2147468069, 2147468003, 2147467967, 2147467963,
    2147467921, 2147467919, 2147467871, 2147467813, 2147467801, 2147467793,
    2147467769, 2147467759, 2147467747, 2147467733, 2147467717, 2147467711,
    2147467697, 2147467669, 2147467667, 2147467639, 2147467631, 2147467627,
    2147467583, 2147467579, 2147467559, 2147467493, 2147467471, 2147467463,
    2147467403, 2147467393, 2147467379, 2147467367, 2147467339, 2147467331,
    2147467327, 2147467321, 2147467261, 2147467219, 2147467211, 2147467169,
    2147467163, 2147467121, 2147467093, 2147467067, 2147467057, 2147467043,
    2147467009, 2147466991, 2147466973, 2147466947, 2147466943, 2147466931,
    2147466869, 2147466847, 2147466833, 2147466793, 2147466787, 2147466721,
    2147466701, 2147466683, 2147466679, 2147466641, 2147466589, 2147466547,
    2147466539, 2147466521, 2147466487, 2147466479, 2147466463, 2147466457,
    2147466449, 2147466439, 2147466427, 2147466383, 2147466359, 2147466337,
    2147466329, 2147466319, 2147466313, 2147466301, 2147466283, 2147466263,
    2147466257, 2147466239, 2147466229, 2147466227, 2147466187, 2147466179,
    2147466149, 2147466121, 2147466119, 2147466091, 2147466073, 2147466019,
    2147466017, 2147465989, 2147465981, 2147465963, 2147465953, 2147465941,
    2147465917, 2147465867, 2147465851, 2147465833, 2147465797, 2147465743,
    2147465731, 2147465729, 2147465717, 2147465707, 2147465701, 2147465699,
    2147465669, 2147465647, 2147465609, 2147465599, 2147465597, 2147465563,
    2147465549, 2147465531, 2147465477, 2147465473, 2147465471, 2147465431,
    2147465423, 2147465413, 2147465407, 2147465363, 2147465351, 2147465339,
    2147465321, 2147465267, 2147465239, 2147465233, 2147465227, 2147465213,
    2147465197, 2147465189, 2147465161, 2147465153, 2147465087, 2147465009,
    2147464961, 2147464903, 2147464841, 2147464807, 2147464783, 2147464777,
    2147464751, 2147464747, 2147464729, 2147464687, 2147464681, 2147464661,
    2147464619, 2147464609, 2147464603, 2147464597, 2147464589, 2147464567,
    2147464559, 2147464549, 2147464513, 2147464511, 2147464489, 2147464447,
    2147464411, 2147464409, 2147464393, 2147464351, 2147464337, 2147464331,
    2147464307, 2147464301, 2147464243, 2147464219, 2147464211, 2147464171,
    2147464133, 2147464129, 2147464103, 2147464087, 2147464061, 2147464049,
    2147464043, 2147464013, 2147464009, 2147464003, 2147463973, 2147463943,
    2147463917, 2147463889, 2147463863, 2147463767, 2147463761, 2147463737,
    2147463727, 2147463691, 2147463673, 2147463641, 2147463631, 2147463599,
    2147463569, 2147463553, 2147463547, 2147463499, 2147463491, 2147463449,
    2147463421, 2147463407, 2147463401, 2147463361, 2147463347, 2147463319,
    2147463299, 2147463293, 2147463271, 2147463259, 2147463257, 2147463251,
    2147463221, 2147463203, 2147463181, 2147463167, 2147463161, 2147463151,
    2147463133, 2147463121, 2147463077, 2147463053, 2147463047, 2147463023,
    2147463007, 2147462981, 2147462951, 2147462923, 2147462881, 2147462861,
    2147462833, 2147462809, 2147462753, 2147462747, 2147462717, 2147462701,
    2147462693, 2147462633, 2147462623, 2147462621, 2147462587, 2147462579,
    2147462567, 2147462543, 2147462539, 2147462497, 2147462419, 2147462393,
    2147462381, 2147462357, 2147462323, 2147462299, 2147462297, 2147462281,
    2147462257, 2147462231, 2147462227, 2147462197, 2147462189, 2147462179,
    2147462173, 2147462159, 2147462147, 2147462143, 2147462123, 2147462111,
    2147462089, 2147462081, 2147462077, 2147462063, 2147462047, 2147462029,
    2147462027, 2147462017, 2147461991, 2147461973, 2147461937, 2147461933,
    2147461891, 2147461889, 2147461847, 2147461843, 2147461837, 2147461817,
    2147461807, 2147461793, 2147461787, 2147461783, 2147461781, 2147461727,
    2147461691, 2147461651, 2147461621, 2147461619, 2147461559, 2147461499,
    2147461487, 2147461483, 2147461423, 2147461363, 2147461361, 2147461313,
    2147461297, 2147461289, 2147461279, 2147461273, 2147461207, 2147461201,
    2147461189, 2147461177, 2147461157, 2147461133, 2147461103, 2147461061,
    2147461051, 2147461039, 2147461037, 2147461021, 2147461007, 2147460983,
    2147460967, 2147460947, 2147460919, 2147460911, 2147460899, 2147460877,
    2147460869, 2147460857, 2147460851, 2147460829, 2147460811, 2147460781,
    2147460779, 2147460773, 2147460709, 2147460703, 2147460683, 2147460671,
    2147460659, 2147460641, 2147460631, 2147460629, 2147460611, 2147460589,
    2147460569, 2147460547, 2147460467, 2147460461, 2147460457, 2147460449,
    2147460437, 2147460431, 2147460421, 2147460379, 2147460373, 2147460299,
    2147460277, 2147460269, 2147460253, 2147460233, 2147460223, 2147460197,
    2147460187, 2147460173, 2147460151, 2147460137, 2147460089, 2147460041,
    2147460019, 2147460017, 2147460013, 2147459999, 2147459987, 2147459981,
    2147459969, 2147459959, 2147459917, 2147459887, 2147459851, 2147459849,
    2147459843, 2147459833, 2147459779, 2147459753, 2147459731, 2147459723,
    2147459711, 2147459707, 2147459701, 2147459617, 2147459579, 2147459557,
    2147459543, 2147459537, 2147459473, 2147459441, 2147459437, 2147459399,
    2147459393, 2147459389, 2147459387, 2147459359, 2147459357, 2147459341,
    2147459339, 2147459333, 2147459299, 2147459269, 2147459267, 2147459263,
    2147459213, 2147459203, 2147459183, 2147459161, 2147459137, 2147459131,
    2147459117, 2147459089, 2147459053, 2147459047, 2147458997, 2147458991,
    2147458981, 2147458967, 2147458897, 2147458889, 2147458879, 2147458867,
    2147458849, 2147458801, 2147458777, 2147458769, 2147458759, 2147458757,
    2147458723, 2147458711, 2147458699, 2147458693, 2147458631, 2147458627,
    2147458601, 2147458583, 2147458543, 2147458541, 2147458507, 2147458487,
    2147458463, 2147458393, 2147458387, 2147458373, 2147458349, 2147458331,
    2147458297, 2147458283, 2147458277, 2147458231, 2147458171, 2147458163,
    2147458129, 2147458099, 2147458073, 2147458067, 2147458063, 2147458051,
    2147458031, 2147457973, 2147457967, 2147457959, 2147457913, 2147457889,
    2147457887, 2147457853, 2147457841, 2147457839, 2147457817, 2147457811,
    2147457791, 2147457769, 2147457757, 2147457749, 2147457737, 2147457709,
    2147457707, 2147457701, 2147457679, 2147457677, 2147457673, 2147457659,
    2147457623, 2147457563, 2147457547, 2147457517, 2147457469, 2147457439,
    2147457437, 2147457427, 2147457421, 2147457413, 2147457407, 2147457383,
    2147457371, 2147457343, 2147457313, 2147457293, 2147457283, 2147457259,
    2147457241, 2147457239, 2147457229, 2147457227, 2147457217, 2147457211,
    2147457199, 2147457173, 2147457149, 2147457113, 2147457073, 2147457071,
    2147457061, 2147457049, 2147456981, 2147456963, 2147456957, 2147456929,
    2147456923, 2147456911, 2147456903, 2147456887, 2147456879, 2147456869,
    2147456867, 2147456797, 2147456789, 2147456737, 2147456693, 2147456683,
    2147456681, 2147456671, 2147456659, 2147456621, 2147456611, 2147456603,
    2147456599, 2147456543, 2147456533, 2147456501, 2147456489, 2147456417,
    2147456401, 2147456393, 2147456317, 2147456299, 2147456189, 2147456161,
    2147456141, 2147456117, 2147456107, 2147456089, 2147456063, 2147456023,
    2147456011, 2147455993, 2147455969, 2147455907, 2147455903, 2147455889,
    2147455853, 2147455837, 2147455831, 2147455741, 2147455721, 2147455703,
    2147455699, 2147455663, 2147455631, 2147455613, 2147455603, 2147455571,
    2147455567, 2147455547, 2147455523, 2147455517, 2147455501, 2147455489,
    2147455477, 2147455459, 2147455403, 2147455363, 2147455361, 2147455357,
    2147455313, 2147455301, 2147455291, 2147455267, 2147455253, 2147455241,
    2147455231, 2147455229, 2147455169, 2147455151, 2147455111, 2147455103,
    2147455091, 2147455087, 2147455081, 2147455061, 2147455043, 2147455027,
    2147455021, 2147455019, 2147455003, 2147454997, 2147454973, 2147454941,
    2147454937, 2147454851, 2147454839, 2147454833, 2147454809, 2147454763,
    2147454761, 2147454713, 2147454643, 2147454629, 2147454563, 2147454539,
    2147454523, 2147454521, 2147454511, 2147454509, 2147454493, 2147454481,
    2147454403, 2147454391, 2147454383, 2147454377, 2147454367, 2147454343,
    2147454341, 2147454307, 2147454247, 2147454241, 2147454217, 2147454163,
    2147454149, 2147454131, 2147454073, 2147454019, 2147453999, 2147453993,
    2147453963, 2147453939, 2147453933, 2147453911, 2147453897, 2147453881,
    2147453873, 2147453849, 2147453831, 2147453809, 2147453801, 2147453797,
    2147453779, 2147453729, 2147453713, 2147453687, 2147453657, 2147453653,
    2147453647, 2147453639, 2147453599, 2147453563, 2147453557, 2147453551,
    2147453531, 2147453527, 2147453507, 2147453467, 2147453431, 2147453419,
    2147453401, 2147453387, 2147453339, 2147453327, 2147453317, 2147453309,
    2147453281, 2147453257, 2147453251, 2147453237, 2147453233, 2147453197,
    2147453159, 2147453137, 2147453081, 2147453057, 2147453047, 2147452999,
    2147452991, 2147452973, 2147452949, 2147452921, 2147452897, 2147452883,
    2147452877, 2147452847, 2147452831, 2147452807, 2147452793, 2147452757,
    2147452721, 2147452651, 2147452627, 2147452621, 2147452591, 2147452547,
    2147452543, 2147452501, 2147452487, 2147452471, 2147452469, 2147452457,
    2147452421, 2147452387, 2147452369, 2147452343, 2147452331, 2147452303,
    2147452261, 2147452249, 2147452217, 2147452211, 2147452193, 2147452187,
    2147452171, 2147452147, 2147452129, 2147452127, 2147452093, 2147452061,
    2147452049, 2147452033, 2147452031, 2147452009, 2147451961, 2147451947,
    2147451937, 2147451923, 2147451899, 2147451881, 2147451857, 2147451829,
    2147451797, 2147451751, 2147451739, 2147451697, 2147451671, 2147451659,
    2147451643, 2147451617, 2147451601, 2147451571, 2147451569, 2147451563,
    2147451517, 2147451461, 2147451457, 2147451443, 2147451413, 2147451409,
    2147451389, 2147451367, 2147451359, 2147451349, 2147451329, 2147451311,
    2147451289, 2147451263, 2147451211, 2147451199, 2147451139, 2147451133,
    2147451121, 2147451107, 2147451083, 2147451049, 2147451043, 2147450993,
    2147450947, 2147450933, 2147450923, 2147450861, 2147450843, 2147450827,
    2147450803, 2147450801, 2147450779, 2147450777, 2147450741, 2147450717,
    2147450707, 2147450689, 2147450681, 2147450677, 2147450647, 2147450629,
    2147450621, 2147450603, 2147450597, 2147450581, 2147450579, 2147450521,
    2147450519, 2147450491, 2147450483, 2147450419, 2147450411, 2147450369,
    2147450323, 2147450293, 2147450287, 2147450267, 2147450213, 2147450209,
    2147450189, 2147450171, 2147450159, 2147450113, 2147450027, 2147449999,
    2147449961, 2147449937, 2147449891, 2147449849, 2147449847, 2147449823,
    2147449789, 2147449783, 2147449769, 2147449753, 2147449751, 2147449747,
    2147449723, 2147449721, 2147449649, 2147449631, 2147449607, 2147449589,
    2147449567, 2147449517, 2147449501, 2147449417, 2147449357, 2147449321,
    2147449309, 2147449279, 2147449229, 2147449219, 2147449207, 2147449193,
    2147449153, 2147449151, 2147449133, 2147449079, 2147449069, 2147449039,
    2147449033, 2147449013, 2147448991, 2147448977, 2147448967, 2147448937,
    2147448929, 2147448907, 2147448899, 2147448887, 2147448881, 2147448851,
    2147448763, 2147448757, 2147448749, 2147448733, 2147448731, 2147448713,
    2147448707, 2147448703, 2147448701, 2147448679, 2147448671, 2147448629,
    2147448593, 2147448581, 2147448577, 2147448539, 2147448473, 2147448467,
    2147448427, 2147448409, 2147448379, 2147448367, 2147448353, 2147448323,
    2147448301, 2147448287, 2147448257, 2147448253, 2147448197, 2147448181,
    2147448101, 2147448091, 2147448071, 2147448059, 2147448049, 2147448031,
    2147448013, 2147447987, 2147447977, 2147447933, 2147447917, 2147447899,
    2147447881, 2147447833, 2147447807, 2147447791, 2147447777, 2147447747,
    2147447723, 2147447669, 2147447657, 2147447641, 2147447639, 2147447609,
    2147447597, 2147447573, 2147447473, 2147447459, 2147447453, 2147447411,
    2147447389, 2147447383, 2147447363, 2147447359, 2147447347, 2147447339,
    2147447333, 2147447321, 2147447261, 2147447251, 2147447243, 2147447231,
    2147447213, 2147447179, 2147447171, 2147447101, 2147447017, 2147447011,
    2147446997, 2147446993, 2147446991, 2147446963, 2147446943, 2147446927,
    2147446921, 2147446871, 2147446843, 2147446841, 2147446837, 2147446831,
    2147446793, 2147446699, 2147446687, 2147446673, 2147446669, 2147446667,
    2147446661, 2147446657, 2147446619, 2147446571, 2147446489, 2147446439,
    2147446391, 2147446373, 2147446361, 2147446351, 2147446339, 2147446337,
    2147446321, 2147446303, 2147446297, 2147446289, 2147446283, 2147446247,
    2147446193, 2147446181, 2147446163, 2147446159, 2147446151, 2147446141,
    2147446097, 2147446087, 2147446079, 2147446057, 2147446039, 2147446033,
    2147446009, 2147446003, 2147445983, 2147445973, 2147445943, 2147445917,
    2147445913, 2147445893, 2147445887, 2147445869, 2147445851, 2147445823,
    2147445799, 2147445787, 2147445709, 2147445691, 2147445689, 2147445631,
    2147445589, 2147445541, 2147445539, 2147445533, 2147445497, 2147445473,
    2147445449, 2147445437, 2147445427, 2147445401, 2147445373, 2147445343,
    2147445319, 2147445317, 2147445283, 2147445277, 2147445239, 2147445211,
    2147445203, 2147445191, 2147445173, 2147445143, 2147445137, 2147445121,
    2147445119, 2147445103, 2147445101, 2147445077, 2147445029, 2147445011,
    2147444977, 2147444963, 2147444941, 2147444917, 2147444891, 2147444851,
    2147444843, 2147444833, 2147444821, 2147444797, 2147444791, 2147444773,
    2147444713, 2147444687, 2147444669, 2147444647, 2147444633, 2147444609,
    2147444603, 2147444569, 2147444567, 2147444561, 2147444501, 2147444479,
    2147444459, 2147444441, 2147444399, 2147444389, 2147444359, 2147444333,
    2147444317, 2147444293, 2147444291, 2147444279, 2147444251, 2147444213,
    2147444177, 2147444161, 2147444153, 2147444107, 2147444081, 2147444077,
    2147444071, 2147444041, 2147444021, 2147444017, 2147443931, 2147443913,
    2147443799, 2147443789, 2147443787, 2147443759, 2147443747, 2147443729,
    2147443721, 2147443679, 2147443633, 2147443603, 2147443589, 2147443579,
    2147443567, 2147443561, 2147443547, 2147443537, 2147443523, 2147443513,
    2147443471, 2147443423, 2147443421, 2147443411, 2147443399, 2147443391,
    2147443373, 2147443357, 2147443343, 2147443339, 2147443303, 2147443283,
    2147443223, 2147443211, 2147443171, 2147443169, 2147443163, 2147443157,
    2147443121, 2147443087, 2147443057, 2147443049, 2147443033, 2147443021,
    2147443013, 2147443003, 2147442989, 2147442977, 2147442961, 2147442931,
    2147442901, 2147442893, 2147442851, 2147442827, 2147442823, 2147442811,
    2147442809, 2147442797, 2147442767, 2147442763, 2147442751, 2147442697,
    2147442677, 2147442673, 2147442637, 2147442629, 2147442623, 2147442613,
    2147442559, 2147442523, 2147442511, 2147442487, 2147442469, 2147442467,
    2147442457, 2147442433, 2147442419, 2147442413, 2147442391, 2147442347,
    2147442331, 2147442299, 2147442289, 2147442277, 2147442221, 2147442203,
    2147442191, 2147442179, 2147442139, 2147442131, 2147442119, 2147442071,
    2147442061, 2147442053, 2147442043, 2147442029, 2147441999, 2147441977,
    2147441971, 2147441963, 2147441903, 2147441893, 2147441869, 2147441867,
    2147441843, 2147441839, 2147441833, 2147441831, 2147441767, 2147441749,
    2147441711, 2147441701, 2147441671, 2147441623, 2147441587, 2147441563,
    2147441539, 2147441531, 2147441519, 2147441507, 2147441501, 2147441453,
    2147441449, 2147441423, 2147441399, 2147441357, 2147441347, 2147441311,
    2147441281, 2147441273, 2147441251, 2147441239, 2147441209, 2147441201,
    2147441189, 2147441167, 2147441159, 2147441147, 2147441141, 2147441137,
    2147441119, 2147441099, 2147441063, 2147441033, 2147440991, 2147440979,
    2147440973, 2147440961, 2147440957, 2147440943, 2147440921, 2147440903,
    2147440873, 2147440853, 2147440849, 2147440847, 2147440843, 2147440837,
    2147440829, 2147440751, 2147440733, 2147440721, 2147440703, 2147440699,
    2147440643, 2147440639, 2147440637, 2147440621, 2147440619, 2147440579,
    2147440549, 2147440469, 2147440441, 2147440433, 2147440429, 2147440423,
    2147440409, 2147440397, 2147440367, 2147440349, 2147440261, 2147440247,
    2147440219, 2147440201, 2147440117, 2147440109, 2147440069, 2147440049,
    2147440039, 2147440027, 2147439991, 2147439989, 2147439979, 2147439961,
    2147439953, 2147439923, 2147439911, 2147439883, 2147439863, 2147439859,
    2147439841, 2147439803, 2147439799, 2147439731, 2147439727, 2147439709,
    2147439653, 2147439599, 2147439583, 2147439557, 2147439523, 2147439509,
    2147439491, 2147439443, 2147439407, 2147439401, 2147439341, 2147439331,
    2147439323, 2147439293, 2147439271, 2147439251, 2147439227, 2147439209,
    2147439187, 2147439149, 2147439143, 2147439061, 2147439017, 2147438987,
    2147438941, 2147438927, 2147438897, 2147438873, 2147438869, 2147438833,
    2147438749, 2147438743, 2147438731, 2147438717, 2147438707, 2147438687,
    2147438681, 2147438663, 2147438633, 2147438617, 2147438599, 2147438563,
    2147438519, 2147438483, 2147438459, 2147438441, 2147438437, 2147438393,
    2147438389, 2147438357, 2147438353, 2147438347, 2147438303, 2147438261,
    2147438207, 2147438179, 2147438143, 2147438123, 2147438093, 2147438077,
    2147438057, 2147438053, 2147438009, 2147438003, 2147437997, 2147437937,
    2147437889, 2147437871, 2147437843, 2147437819, 2147437811, 2147437801,
    2147437777, 2147437769, 2147437753, 2147437751, 2147437723, 2147437651,
    2147437613, 2147437609, 2147437601, 2147437583, 2147437577, 2147437553,
    2147437531, 2147437511, 2147437493, 2147437451, 2147437447, 2147437429,
    2147437291, 2147437283, 2147437267, 2147437217, 2147437183, 2147437181,
    2147437147, 2147437079, 2147437073, 2147437069, 2147437027, 2147437001,
    2147436997, 2147436989, 2147436959, 2147436931, 2147436919, 2147436901,
    2147436877, 2147436871, 2147436833, 2147436793, 2147436751, 2147436701,
    2147436667, 2147436659, 2147436611, 2147436559, 2147436517, 2147436463,
    2147436443, 2147436427, 2147436419, 2147436397, 2147436353, 2147436337,
    2147436281, 2147436217, 2147436199, 2147436197, 2147436143, 2147436119,
    2147436103, 2147436091, 2147436079, 2147436047, 2147436041, 2147436037,
    2147436019, 2147435987, 2147435977, 2147435959, 2147435957, 2147435951,
    2147435929, 2147435911, 2147435897, 2147435893, 2147435891, 2147435861,
    2147435809, 2147435791, 2147435789, 2147435783, 2147435777, 2147435737,
    2147435701, 2147435623, 2147435599, 2147435569, 2147435539, 2147435533,
    2147435527, 2147435509, 2147435501, 2147435491, 2147435483, 2147435473,
    2147435431, 2147435417, 2147435371, 2147435327, 2147435321, 2147435299,
    2147435293, 2147435287, 2147435281, 2147435261, 2147435249, 2147435243,
    2147435201, 2147435161, 2147435149, 2147435141, 2147435083, 2147435071,
    2147435063, 2147435057, 2147435039, 2147435009, 2147434981, 2147434979,
    2147434943, 2147434909, 2147434907, 2147434879, 2147434871, 2147434829,
    2147434811, 2147434771, 2147434733, 2147434727, 2147434703, 2147434691,
    2147434687, 2147434673, 2147434651, 2147434603, 2147434579, 2147434561,
    2147434529, 2147434519, 2147434517, 2147434507, 2147434483, 2147434477,
    2147434451, 2147434439, 2147434411, 2147434391, 2147434363, 2147434361,
    2147434309, 2147434291, 2147434279, 2147434243, 2147434217, 2147434193,
    2147434153, 2147434141, 2147434127, 2147434117, 2147434109, 2147434103,
    2147434099, 2147434063, 2147434049, 2147434043, 2147434013, 2147434007,
    2147434001, 2147433991, 2147433947, 2147433943, 2147433929, 2147433887,
    2147433811, 2147433791, 2147433779, 2147433719, 2147433707, 2147433703,
    2147433697, 2147433667, 2147433649, 2147433583, 2147433577, 2147433559,
    2147433551, 2147433521, 2147433517, 2147433503, 2147433487, 2147433469,
    2147433451, 2147433401, 2147433391, 2147433389, 2147433347, 2147433317,
    2147433311, 2147433263, 2147433247, 2147433229, 2147433227, 2147433193,
    2147433173, 2147433139, 2147433137, 2147433133, 2147433103, 2147433091,
    2147433077, 2147433031, 2147433007, 2147432999, 2147432993, 2147432981,
    2147432951, 2147432921, 2147432909, 2147432893, 2147432873, 2147432863,
    2147432767, 2147432731, 2147432723, 2147432699, 2147432663, 2147432627,
    2147432587, 2147432561, 2147432549, 2147432531, 2147432509, 2147432501,
    2147432479, 2147432473, 2147432389, 2147432387, 2147432369, 2147432351,
    2147432293, 2147432239, 2147432207, 2147432173, 2147432171, 2147432149,
    2147432143, 2147432137, 2147432123, 2147432087, 2147432069, 2147432057,
    2147432051, 2147432039, 2147432009, 2147431973, 2147431967, 2147431963,
    2147431943, 2147431939, 2147431921, 2147431879, 2147431843, 2147431837,
    2147431831, 2147431757, 2147431751, 2147431733, 2147431709, 2147431681,
    2147431669, 2147431667, 2147431651, 2147431633, 2147431631, 2147431613,
    2147431609, 2147431579, 2147431553, 2147431543, 2147431541, 2147431529,
    2147431513, 2147431511, 2147431477, 2147431459, 2147431453, 2147431439,
    2147431417, 2147431393, 2147431387, 2147431367, 2147431343, 2147431337,
    2147431331, 2147431259, 2147431213, 2147431207, 2147431199, 2147431193,
    2147431171, 2147431159, 2147431147, 2147431141, 2147431103, 2147431093,
    2147431079, 2147431073, 2147431001, 2147430991, 2147430979, 2147430941,
    2147430917, 2147430907, 2147430899, 2147430881, 2147430841, 2147430821,
    2147430757, 2147430743, 2147430739, 2147430721, 2147430689, 2147430653,
    2147430629, 2147430617, 2147430587, 2147430583, 2147430563, 2147430557,
    2147430553, 2147430547, 2147430529, 2147430503, 2147430499, 2147430487,
    2147430437, 2147430413, 2147430379, 2147430371, 2147430353, 2147430349,
    2147430317, 2147430283, 2147430281, 2147430253, 2147430239, 2147430221,
    2147430209, 2147430169, 2147430163, 2147430149, 2147430127, 2147430113,
    2147430101, 2147430083, 2147430079, 2147430073, 2147430071, 2147430049,
    2147430011, 2147430007, 2147430001, 2147429993, 2147429969, 2147429897,
    2147429881, 2147429863, 2147429849, 2147429839, 2147429827, 2147429807,
    2147429803, 2147429743, 2147429689, 2147429659, 2147429633, 2147429621,
    2147429611, 2147429563, 2147429561, 2147429467, 2147429441, 2147429413,
    2147429363, 2147429353, 2147429351, 2147429311, 2147429309, 2147429281,
    2147429237, 2147429233, 2147429213, 2147429197, 2147429183, 2147429173,
    2147429147, 2147429131, 2147429071, 2147429057, 2147429047, 2147429023,
    2147429003, 2147428999, 2147428991, 2147428981, 2147428957, 2147428949,
    2147428891, 2147428861, 2147428837, 2147428823, 2147428819, 2147428793,
    2147428783, 2147428739, 2147428727, 2147428709, 2147428687, 2147428561,
    2147428537, 2147428523, 2147428519, 2147428489, 2147428433, 2147428421,
    2147428403, 2147428363, 2147428343, 2147428333, 2147428307, 2147428277,
    2147428267, 2147428243, 2147428193, 2147428181, 2147428147, 2147428139,
    2147428109, 2147428099, 2147428093, 2147428069, 2147428027, 2147428021,
    2147427973, 2147427949, 2147427929, 2147427923, 2147427911, 2147427907,
    2147427901, 2147427883, 2147427859, 2147427847, 2147427839, 2147427827,
    2147427797, 2147427781, 2147427727, 2147427703, 2147427701, 2147427679,
    2147427677, 2147427647, 2147427643, 2147427593, 2147427563, 2147427551,
    2147427473, 2147427427, 2147427397, 2147427229, 2147427221, 2147427209,
    2147427173, 2147427169, 2147427157, 2147427151, 2147427137, 2147427091,
    2147427083, 2147427047, 2147427043, 2147427041, 2147427001, 2147426989,
    2147426971, 2147426951, 2147426843, 2147426821, 2147426747, 2147426693,
    2147426681, 2147426669, 2147426657, 2147426651, 2147426641, 2147426629,
    2147426623, 2147426573, 2147426557, 2147426551, 2147426543, 2147426527,
    2147426521, 2147426497, 2147426471, 2147426467, 2147426459, 2147426419,
    2147426401, 2147426399, 2147426377, 2147426353, 2147426339, 2147426329,
    2147426317, 2147426263, 2147426243, 2147426221, 2147426207, 2147426167,
    2147426161, 2147426159, 2147426153, 2147426147, 2147426143, 2147426137,
    2147426117, 2147426107, 2147426081, 2147426053, 2147426003, 2147425993,
    2147425979, 2147425937, 2147425933, 2147425879, 2147425871, 2147425853,
    2147425759, 2147425729, 2147425711, 2147425681, 2147425663, 2147425607,
    2147425591, 2147425559, 2147425541, 2147425531, 2147425519, 2147425513,
    2147425507, 2147425457, 2147425453, 2147425447, 2147425411, 2147425393,
    2147425381, 2147425349, 2147425333, 2147425309, 2147425297, 2147425283,
    2147425249, 2147425243, 2147425237, 2147425213, 2147425187, 2147425169,
    2147425139, 2147425127, 2147425123, 2147425121, 2147425103, 2147425073,
    2147425067, 2147425001, 2147424949, 2147424913, 2147424899, 2147424893,
    2147424869, 2147424863, 2147424827, 2147424817, 2147424809, 2147424793,
    2147424787, 2147424709, 2147424641, 2147424589, 2147424583, 2147424577,
    2147424563, 2147424557, 2147424551, 2147424533, 2147424523, 2147424511,
    2147424481, 2147424469, 2147424431, 2147424427, 2147424359, 2147424353,
    2147424329, 2147424311, 2147424299, 2147424287, 2147424259, 2147424247,
    2147424203, 2147424179, 2147424143, 2147424133, 2147424127, 2147424113,
    2147424107, 2147424101, 2147424079, 2147424073, 2147424047, 2147424029,
    2147424011, 2147424007, 2147423983, 2147423963, 2147423959, 2147423953,
    2147423917, 2147423893, 2147423881, 2147423851, 2147423849, 2147423821,
    2147423771, 2147423753, 2147423743, 2147423717, 2147423713, 2147423711,
    2147423701, 2147423693, 2147423689, 2147423683, 2147423671, 2147423659,
    2147423651, 2147423647, 2147423627, 2147423587, 2147423573, 2147423563,
    2147423557, 2147423533, 2147423513, 2147423507, 2147423489, 2147423477,
    2147423461, 2147423431, 2147423423, 2147423363, 2147423347, 2147423309,
    2147423303, 2147423293, 2147423281, 2147423273, 2147423269, 2147423249,
    2147423197, 2147423189, 2147423183, 2147423143, 2147423137, 2147423099,
    2147423087, 2147423027, 2147423021, 2147423009, 2147422987, 2147422933,
    2147422897, 2147422891, 2147422873, 2147422861, 2147422819, 2147422817,
    2147422811, 2147422789, 2147422777, 2147422747, 2147422727, 2147422723,
    2147422703, 2147422691, 2147422679, 2147422663, 2147422657, 2147422649,
    2147422633, 2147422603, 2147422573, 2147422559, 2147422549, 2147422493,
    2147422489, 2147422481, 2147422471, 2147422463, 2147422457, 2147422441,
    2147422429, 2147422373, 2147422369, 2147422357, 2147422331, 2147422271,
    2147422241, 2147422229, 2147422219, 2147422213, 2147422183, 2147422153,
    2147422139, 2147422129, 2147422127, 2147422097, 2147422087, 2147422063,
    2147422061, 2147422037, 2147422033, 2147422019, 2147421989, 2147421953,
    2147421911, 2147421907, 2147421893, 2147421883, 2147421853, 2147421833,
    2147421769, 2147421737, 2147421721, 2147421709, 2147421697, 2147421673,
    2147421649, 2147421607, 2147421593, 2147421581, 2147421571, 2147421541,
    2147421527, 2147421517, 2147421481, 2147421469, 2147421461, 2147421457,
    2147421449, 2147421383, 2147421379, 2147421373, 2147421349, 2147421343,
    2147421337, 2147421329, 2147421301, 2147421277, 2147421271, 2147421259,
    2147421253, 2147421233, 2147421209, 2147421179, 2147421167, 2147421149,
    2147421127, 2147421121, 2147421091, 2147421077, 2147421049, 2147421047,
    2147421041, 2147421019, 2147420999, 2147420963, 2147420959, 2147420939,
    2147420923, 2147420917, 2147420887, 2147420857, 2147420789, 2147420777,
    2147420767, 2147420753, 2147420749, 2147420729, 2147420719, 2147420683,
    2147420669, 2147420657, 2147420593, 2147420533, 2147420477, 2147420447,
    2147420419, 2147420389, 2147420371, 2147420321, 2147420293, 2147420291,
    2147420273, 2147420269, 2147420183, 2147420179, 2147420167, 2147420153,
    2147420123, 2147420111, 2147420069, 2147420057, 2147420017, 2147419997,
    2147419993, 2147419987, 2147419979, 2147419961, 2147419951, 2147419943,
    2147419933, 2147419891, 2147419877, 2147419867, 2147419849, 2147419819,
    2147419793, 2147419733, 2147419721, 2147419627, 2147419619, 2147419609,
    2147419607, 2147419559, 2147419553, 2147419543, 2147419537, 2147419529,
    2147419493, 2147419489, 2147419457, 2147419453, 2147419399, 2147419397,
    2147419363, 2147419361, 2147419327, 2147419301, 2147419291, 2147419249,
    2147419247, 2147419229, 2147419189, 2147419151, 2147419147, 2147419139,
    2147419129, 2147419111, 2147419033, 2147419019, 2147418979, 2147418961,
    2147418947, 2147418859, 2147418853, 2147418841, 2147418827, 2147418821,
    2147418803, 2147418797, 2147418719, 2147418683, 2147418677, 2147418653,
    2147418641, 2147418629, 2147418619, 2147418607, 2147418599, 2147418521,
    2147418517, 2147418509, 2147418503, 2147418487, 2147418473, 2147418463,
    2147418421, 2147418373, 2147418349, 2147418347, 2147418341, 2147418313,
    2147418307, 2147418283, 2147418277, 2147418227, 2147418199, 2147418191,
    2147418179, 2147418137, 2147418131, 2147418127, 2147418083, 2147418079,
    2147418067, 2147418043, 2147418041, 2147418037, 2147418011, 2147418001,
    2147417969, 2147417941, 2147417939, 2147417929, 2147417911, 2147417903,
    2147417869, 2147417819, 2147417813, 2147417773, 2147417759, 2147417717,
    2147417707, 2147417693, 2147417669, 2147417663, 2147417653, 2147417593,
    2147417551, 2147417539, 2147417527, 2147417521, 2147417453, 2147417443,
    2147417423, 2147417383, 2147417381, 2147417351, 2147417329, 2147417303,
    2147417267, 2147417179, 2147417171, 2147417141, 2147417117, 2147417113,
    2147417093, 2147417053, 2147417023, 2147416991, 2147416987, 2147416979,
    2147416967, 2147416963, 2147416949, 2147416927, 2147416907, 2147416883,
    2147416877, 2147416867, 2147416823, 2147416813, 2147416807, 2147416783,
    2147416771, 2147416769, 2147416759, 2147416721, 2147416709, 2147416703,
    2147416657, 2147416637, 2147416589, 2147416573, 2147416561, 2147416559,
    2147416553, 2147416519, 2147416507, 2147416483, 2147416477, 2147416441,
    2147416379, 2147416357, 2147416343, 2147416339, 2147416301, 2147416267,
    2147416241, 2147416223, 2147416213, 2147416207, 2147416189, 2147416181,
    2147416177, 2147416163, 2147416147, 2147416133, 2147416121, 2147416111,
    2147416109, 2147416079, 2147416067, 2147416057, 2147416031, 2147416003,
    2147415989, 2147415943, 2147415931, 2147415889, 2147415883, 2147415859,
    2147415857, 2147415839, 2147415817, 2147415811, 2147415773, 2147415749,
    2147415737, 2147415719, 2147415709, 2147415703, 2147415659, 2147415629,
    2147415619, 2147415617, 2147415607, 2147415563, 2147415559, 2147415553,
    2147415541, 2147415533, 2147415527, 2147415499, 2147415463, 2147415451,
    2147415449, 2147415443, 2147415427, 2147415373, 2147415343, 2147415337,
    2147415323, 2147415311, 2147415307, 2147415203, 2147415181, 2147415119,
    2147415107, 2147415059, 2147415047, 2147415041, 2147415029, 2147415019,
    2147415013, 2147414999, 2147414977, 2147414953, 2147414947, 2147414839,
    2147414837, 2147414807, 2147414791, 2147414767, 2147414723, 2147414699,
    2147414651, 2147414641, 2147414629, 2147414617, 2147414603, 2147414567,
    2147414531, 2147414519, 2147414513, 2147414509, 2147414497, 2147414461,
    2147414441, 2147414411, 2147414407, 2147414377, 2147414369, 2147414363,
    2147414317, 2147414233, 2147414231, 2147414207, 2147414201, 2147414189,
    2147414183, 2147414117, 2147414057, 2147414053, 2147413993, 2147413981,
    2147413979, 2147413949, 2147413913, 2147413903, 2147413889, 2147413867,
    2147413859, 2147413813, 2147413781, 2147413757, 2147413753, 2147413739,
    2147413729, 2147413711, 2147413661, 2147413657, 2147413651, 2147413603,
    2147413559, 2147413553, 2147413529, 2147413519, 2147413441, 2147413381,
    2147413343, 2147413309, 2147413297, 2147413291, 2147413283, 2147413277,
    2147413273, 2147413223, 2147413211, 2147413201, 2147413153, 2147413139,
    2147413109, 2147413061, 2147413049, 2147413001, 2147412989, 2147412979,
    2147412977, 2147412973, 2147412961, 2147412947, 2147412929, 2147412899,
    2147412877, 2147412833, 2147412797, 2147412791, 2147412731, 2147412721,
    2147412691, 2147412689, 2147412671, 2147412667, 2147412637, 2147412629,
    2147412601, 2147412599, 2147412593, 2147412581, 2147412577, 2147412539,
    2147412521, 2147412493, 2147412479, 2147412467, 2147412461, 2147412451,
    2147412413, 2147412403, 2147412361, 2147412359, 2147412347, 2147412301,
    2147412277, 2147412263, 2147412257, 2147412247, 2147412233, 2147412229,
    2147412209, 2147412149, 2147412143, 2147412133, 2147412037, 2147412017,
    2147411963, 2147411953, 2147411911, 2147411887, 2147411879, 2147411857,
    2147411839, 2147411821, 2147411789, 2147411743, 2147411723, 2147411713,
    2147411683, 2147411657, 2147411639, 2147411621, 2147411603, 2147411579,
    2147411561, 2147411557, 2147411551, 2147411549, 2147411533, 2147411527,
    2147411501, 2147411477, 2147411473, 2147411471, 2147411429, 2147411359,
    2147411339, 2147411333, 2147411297, 2147411263, 2147411251, 2147411221,
    2147411213, 2147411209, 2147411183, 2147411087, 2147411033, 2147411011,
    2147411009, 2147411003, 2147410973, 2147410963, 2147410949, 2147410891,
    2147410873, 2147410849, 2147410829, 2147410823, 2147410817, 2147410813,
    2147410789, 2147410781, 2147410757, 2147410753, 2147410729, 2147410717,
    2147410687, 2147410679, 2147410673, 2147410649, 2147410637, 2147410621,
    2147410619, 2147410597, 2147410567, 2147410543, 2147410537, 2147410523,
    2147410483, 2147410481, 2147410451, 2147410379, 2147410373, 2147410351,
    2147410339, 2147410333, 2147410327, 2147410313, 2147410297, 2147410273,
    2147410271, 2147410253, 2147410247, 2147410217, 2147410163, 2147410159,
    2147410127, 2147410051, 2147410043, 2147410037, 2147410007, 2147409989,
    2147409977, 2147409967, 2147409949, 2147409907, 2147409899, 2147409871,
    2147409841, 2147409799, 2147409793, 2147409787, 2147409751, 2147409721,
    2147409713, 2147409707, 2147409653, 2147409647, 2147409631, 2147409629,
    2147409623, 2147409619, 2147409601, 2147409577, 2147409547, 2147409541,
    2147409499, 2147409493, 2147409491, 2147409457, 2147409443, 2147409409,
    2147409403, 2147409389, 2147409373, 2147409361, 2147409353, 2147409343,
    2147409337, 2147409323, 2147409311, 2147409301, 2147409287, 2147409263,
    2147409239, 2147409217, 2147409181, 2147409167, 2147409163, 2147409157,
    2147409137, 2147409113, 2147409083, 2147409067, 2147409049, 2147409041,
    2147409031, 2147408981, 2147408957, 2147408911, 2147408909, 2147408881,
    2147408827, 2147408779, 2147408761, 2147408749, 2147408741, 2147408729,
    2147408717, 2147408713, 2147408707, 2147408699, 2147408629, 2147408621,
    2147408609, 2147408591, 2147408587, 2147408563, 2147408551, 2147408531,
    2147408513, 2147408507, 2147408467, 2147408441, 2147408387, 2147408339,
    2147408323, 2147408321, 2147408303, 2147408299, 2147408293, 2147408279,
    2147408273, 2147408267, 2147408243, 2147408233, 2147408209, 2147408201,
    2147408171, 2147408143, 2147408111, 2147408093, 2147408083, 2147408027,
    2147408017, 2147407991, 2147407973, 2147407939, 2147407907, 2147407891,
    2147407877, 2147407861, 2147407807, 2147407799, 2147407793, 2147407741,
    2147407699, 2147407697, 2147407681, 2147407667, 2147407657, 2147407621,
    2147407609, 2147407543, 2147407463, 2147407439, 2147407429, 2147407403,
    2147407337, 2147407333, 2147407319, 2147407279, 2147407271, 2147407261,
    2147407253, 2147407193, 2147407177, 2147407153, 2147407133, 2147407127,
    2147407117, 2147407069, 2147407039, 2147407033, 2147407027, 2147407013,
    2147407001, 2147406997, 2147406991, 2147406979, 2147406953, 2147406931,
    2147406917, 2147406869, 2147406839, 2147406827, 2147406823, 2147406817,
    2147406773, 2147406769, 2147406757, 2147406739, 2147406721, 2147406643,
    2147406631, 2147406623, 2147406601, 2147406589, 2147406553, 2147406517,
    2147406511, 2147406497, 2147406491, 2147406463, 2147406451, 2147406409,
    2147406397, 2147406379, 2147406367, 2147406341, 2147406319, 2147406281,
    2147406229, 2147406223, 2147406199, 2147406193, 2147406167, 2147406161,
    2147406139, 2147406101, 2147406061, 2147406059, 2147406047, 2147406031,
    2147405993, 2147405987, 2147405977, 2147405947, 2147405921, 2147405917,
    2147405893, 2147405801, 2147405759, 2147405747, 2147405693, 2147405657,
    2147405591, 2147405573, 2147405569, 2147405563, 2147405531, 2147405527,
    2147405503, 2147405471, 2147405467, 2147405461, 2147405417, 2147405389,
    2147405357, 2147405353, 2147405333, 2147405329, 2147405291, 2147405279,
    2147405243, 2147405237, 2147405209, 2147405203, 2147405173, 2147405131,
    2147405129, 2147405119, 2147405111, 2147405107, 2147405063, 2147405017,
    2147405003, 2147404991, 2147404981, 2147404957, 2147404943, 2147404933,
    2147404901, 2147404891, 2147404859, 2147404841, 2147404829, 2147404771,
    2147404711, 2147404639, 2147404621, 2147404619, 2147404601, 2147404583,
    2147404579, 2147404577, 2147404489, 2147404447, 2147404439, 2147404429,
    2147404393, 2147404381, 2147404349, 2147404331, 2147404327, 2147404319,
    2147404309, 2147404247, 2147404243, 2147404229, 2147404211, 2147404183,
    2147404157, 2147404153, 2147404141, 2147404121, 2147404099, 2147404067,
    2147404037, 2147404031, 2147404019, 2147404001, 2147403983, 2147403953,
    2147403893, 2147403889, 2147403887, 2147403859, 2147403857, 2147403781,
    2147403779, 2147403737, 2147403719, 2147403701, 2147403673, 2147403593,
    2147403581, 2147403563, 2147403547, 2147403529, 2147403509, 2147403497,
    2147403469, 2147403457, 2147403409, 2147403407, 2147403403, 2147403383,
    2147403343, 2147403341, 2147403311, 2147403283, 2147403217, 2147403179,
    2147403143, 2147403121, 2147403103, 2147403061, 2147403007, 2147402993,
    2147402989, 2147402977, 2147402951, 2147402941, 2147402927, 2147402911,
    2147402899, 2147402869, 2147402833, 2147402827, 2147402791, 2147402783,
    2147402779, 2147402771, 2147402711, 2147402689, 2147402687, 2147402683,
    2147402611, 2147402603, 2147402563, 2147402507, 2147402489, 2147402479,
    2147402443, 2147402437, 2147402423, 2147402419, 2147402417, 2147402407,
    2147402381, 2147402377, 2147402371, 2147402357, 2147402329, 2147402297,
    2147402269, 2147402267, 2147402239, 2147402221, 2147402203, 2147402177,
    2147402161, 2147402119, 2147402099, 2147402027, 2147402009, 2147401973,
    2147401957, 2147401951, 2147401943, 2147401933, 2147401891, 2147401807,
    2147401769, 2147401759, 2147401747, 2147401741, 2147401721, 2147401709,
    2147401681, 2147401667, 2147401661, 2147401591, 2147401573, 2147401567,
    2147401549, 2147401513, 2147401499, 2147401457, 2147401447, 2147401441,
    2147401369, 2147401343, 2147401327, 2147401313, 2147401307, 2147401303,
    2147401271, 2147401253, 2147401241, 2147401213, 2147401181, 2147401171,
    2147401169, 2147401163, 2147401129, 2147401103, 2147401099, 2147401021,
    2147400991, 2147400977, 2147400973, 2147400949, 2147400943, 2147400889,
    2147400877, 2147400847, 2147400821, 2147400803, 2147400799, 2147400769,
    2147400763, 2147400743, 2147400683, 2147400643, 2147400637, 2147400623,
    2147400599, 2147400583, 2147400571, 2147400511, 2147400481, 2147400469,
    2147400457, 2147400449, 2147400433, 2147400397, 2147400377, 2147400361,
    2147400337, 2147400331, 2147400329, 2147400301, 2147400293, 2147400239,
    2147400217, 2147400139, 2147400127, 2147400113, 2147400089, 2147400071,
    2147400053, 2147400011, 2147400001, 2147399983, 2147399981, 2147399959,
    2147399957, 2147399927, 2147399923, 2147399909, 2147399851, 2147399843,
    2147399819, 2147399809, 2147399803, 2147399789, 2147399777, 2147399767,
    2147399759, 2147399753, 2147399731, 2147399719, 2147399711, 2147399701,
    2147399699, 2147399689, 2147399671, 2147399663, 2147399629, 2147399603,
    2147399593, 2147399587, 2147399581, 2147399561, 2147399533, 2147399521,
    2147399519, 2147399509, 2147399491, 2147399461, 2147399447, 2147399431,
    2147399407, 2147399383, 2147399381, 2147399363, 2147399329, 2147399263,
    2147399227, 2147399203, 2147399197, 2147399167, 2147399161, 2147399153,
    2147399147, 2147399141, 2147399123, 2147399113, 2147399087, 2147399069,
    2147399063, 2147399053, 2147399021, 2147399017, 2147398997, 2147398969,
    2147398963, 2147398949, 2147398919, 2147398849, 2147398819, 2147398783,
    2147398769, 2147398681, 2147398679, 2147398667, 2147398597, 2147398577,
    2147398559, 2147398553, 2147398549, 2147398531, 2147398529, 2147398507,
    2147398501, 2147398387, 2147398361, 2147398321, 2147398313, 2147398283,
    2147398277, 2147398261, 2147398229, 2147398219, 2147398207, 2147398157,
    2147398109, 2147398091, 2147398081, 2147398079, 2147398021, 2147398009,
    2147397997, 2147397953, 2147397947, 2147397943, 2147397883, 2147397881,
    2147397877, 2147397859, 2147397853, 2147397827, 2147397821, 2147397817,
    2147397809, 2147397787, 2147397751, 2147397743, 2147397731, 2147397677,
    2147397643, 2147397589, 2147397587, 2147397569, 2147397563, 2147397557,
    2147397541, 2147397479, 2147397463, 2147397443, 2147397437, 2147397433,
    2147397409, 2147397383, 2147397361, 2147397359, 2147397353, 2147397289,
    2147397283, 2147397281, 2147397269, 2147397257, 2147397209, 2147397199,
    2147397193, 2147397137, 2147397097, 2147397071, 2147397029, 2147397019,
    2147397011, 2147396989, 2147396987, 2147396963, 2147396921, 2147396903,
    2147396897, 2147396893, 2147396887, 2147396869, 2147396857, 2147396827,
    2147396819, 2147396807, 2147396761, 2147396759, 2147396749, 2147396711,
    2147396687, 2147396659, 2147396623, 2147396621, 2147396609, 2147396579,
    2147396569, 2147396561, 2147396557, 2147396533, 2147396521, 2147396513,
    2147396441, 2147396413, 2147396411, 2147396401, 2147396399, 2147396353,
    2147396351, 2147396341, 2147396323, 2147396309, 2147396281, 2147396267,
    2147396243, 2147396227, 2147396213, 2147396203, 2147396189, 2147396179,
    2147396159, 2147396129, 2147396077, 2147396063, 2147396057, 2147396051,
    2147396039, 2147395969, 2147395961, 2147395949, 2147395937, 2147395927,
    2147395907, 2147395891, 2147395841, 2147395829, 2147395777, 2147395771,
    2147395729, 2147395721, 2147395709, 2147395703, 2147395697, 2147395669,
    2147395661, 2147395651, 2147395633, 2147395631, 2147395609, 2147395589,
    2147395553, 2147395499, 2147395489, 2147395487, 2147395427, 2147395423,
    2147395421, 2147395417, 2147395379, 2147395373,
)
