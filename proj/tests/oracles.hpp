// Generated by make_oracles.py -- do not edit by hand.
#pragma once

#include <string>
#include <vector>

struct GlmOracleCase {
    std::string family; // glm_gamma_log | glm_gaussian_log
    std::vector<std::vector<double>> predictors;
    std::vector<double> y;
    std::vector<double> beta; // intercept first
};

inline std::vector<GlmOracleCase> glm_oracle_cases() {
    std::vector<GlmOracleCase> cases;
    {
        GlmOracleCase c;
        c.family = "glm_gamma_log";
        c.predictors.emplace_back(); c.predictors.back() = {0.18005735836035042, -0.29802235180188696, 0.791115367459956, -0.8922355913712698, -0.9492473790984055, -0.2069287450398929, -0.6805702251357684, -0.49022395712609534, -0.4427544795016003, -0.18522057956347115, 0.8199056022865829, -0.4495119546119355, 0.26562965391109983, 0.6423451715001007, 0.9393897747123845, 0.023979780348962754, -0.6238871679159894, 0.6208204065298732, -0.0907527301708897, 0.34672889455431877, 0.7424951524113217, -0.2445960349549332, -0.8720628309729948, -0.4996644834076649, 0.09895402305293266, 0.5637207887642752, 0.7591707707566162, -0.021097229009233942, -0.5727237258931204, -0.0654776474494394, -0.5657464783049788, 0.49913385449232117, -0.21416172611019713, -0.2181375178609395};
        c.y = {0.6253459027347172, 0.7159419710577827, 0.6137851781833841, 0.6946802202074035, 0.6720088866357409, 0.7339894448849089, 0.7496554557895074, 0.47932632121787605, 0.6138642911814884, 0.6617399862871234, 0.6097681700909655, 0.6764047829518138, 0.4277593806038802, 0.5465173093471363, 0.493053428804959, 0.5253261905640093, 0.7412692060204994, 0.5785072269380889, 0.9980029180473231, 0.7257854350598814, 0.5928369044125414, 0.523903821491346, 0.6252916227989102, 0.580268812549301, 0.49493690472032964, 0.6270405147992759, 0.4280006170852707, 0.6817129772779517, 0.6790770075364062, 0.6089505359384061, 0.6400350779786449, 0.5573741363707809, 0.5831017454298143, 0.566468008762926};
        c.beta = {-0.4851961426368971, -0.1217506749631326};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gaussian_log";
        c.predictors.emplace_back(); c.predictors.back() = {-0.5800244412953788, 0.0843746905235283, 0.8616401360667927, 0.33318024461311957, 0.7744134777752534, -0.8060756460712251, 0.3959791172651346, -0.39970003704468327, 0.10984895835341701, -0.327621449811637, 0.8443842391985614, 0.41203437103846396, -0.7518800718936252, 0.530277358948859, -0.8341074116592828, -0.7378026306288785, -0.5315258135479071, -0.7558669444345176, -0.5230429066407647, 0.4950537411126521, 0.3504892449543966, -0.6373658031111644, 0.22180096520154602, -0.6276286514485474, 0.6431508794606478, 0.6433183981252846, 0.5041726454876503, 0.1413656949721238, 0.8537708182675927, 0.6557769717901567, 0.6029433076313229, -0.4936674598682922, 0.3416309612390773, -0.2660725980306289, -0.4068432239966979};
        c.predictors.emplace_back(); c.predictors.back() = {-0.23374800893503833, 0.7628347024553441, 0.8301285118761479, 0.3073045150849354, 0.8278310598218994, -0.36968916077048086, -0.4786994729599683, 0.9558018235739942, 0.5540531384425686, 0.24496950021466457, -0.9965271954166153, -0.5609168504941, 0.022316988267075732, 0.649995523327678, 0.7413400814765263, 0.755023838242427, -0.8617395028417283, 0.6990002518915139, -0.5032135162992666, 0.6243548422107001, -0.7581838411889443, 0.9461509068192833, -0.7476345160890763, 0.47186714646640393, 0.5118071052508766, -0.8377462517611491, -0.2836180856400923, -0.8695549729194958, -0.566391935454525, 0.43429401770899645, -0.9590356389434298, 0.6344692912037779, -0.3718583875213972, 0.20699150015570766, -0.8477085835825986};
        c.y = {0.619996293529605, 0.9397485877373059, 0.9287484273108406, 0.7652099260937094, 0.9340630627577708, 0.5844540754173603, 0.5970675953007599, 0.9843726025620041, 0.8404547005979204, 0.7829546921831531, 0.453756493436835, 0.5502027087924172, 0.656809022082436, 0.8813407948730204, 0.903536702975342, 0.9175855464557227, 0.49864206067395167, 0.9017508768658717, 0.603609906751582, 0.9162036686728228, 0.5522042443077054, 0.9738982316419768, 0.5047991481050899, 0.8273705051098531, 0.8235547973366327, 0.5155888959289091, 0.6257120082250397, 0.4815537152947817, 0.5782374041160383, 0.8284586459780919, 0.4573585561261386, 0.8719332153882113, 0.6514617490602278, 0.7646665779011858, 0.4870169803706738};
        c.beta = {-0.36825449599202453, 0.006791312937783473, 0.3749857205078438};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gamma_log";
        c.predictors.emplace_back(); c.predictors.back() = {-0.3163009831012302, 0.46250294357738353, 0.7258657665684276, 0.33945370144635945, 0.03585528846824659, -0.7848070885277616, -0.45347115711185637, 0.8569802356434384, 0.5456982897490765, -0.6877738343737358, 0.24431080940467864, 0.985086204760685, -0.9464559277882743, -0.8598570301715804, -0.05460221681100452, 0.6952486139905278, -0.8548959404750616, 0.3984375670103397, -0.7919826260142409, -0.9518818980629933, 0.48870815565784476, 0.11208801859899187, -0.6925832927578739, 0.9934846080238391, -0.9690575563055404, 0.9128835272043063, 0.04760500278857838, -0.6790988505874413, -0.4657727297107803, -0.6453974999854768, 0.24831167939394283, 0.20149767977747857, -0.4370792228245979};
        c.predictors.emplace_back(); c.predictors.back() = {0.045284098082787105, 0.07120682310546345, -0.6437156404748674, -0.5649810482905833, -0.8616221042754615, -0.38804013903897805, 0.9405236097129797, -0.09045126642308099, -0.05335660224976935, 0.9091804677244737, 0.08853405087054944, 0.870358496583904, -0.22563676486109685, 0.96470907460667, 0.8606998048390779, 0.9528251204436529, -0.9805373302219043, -0.31212929295326086, -0.9905179665376158, 0.43505516900444885, -0.720513783360107, -0.703695733389107, 0.6704099547904221, -0.020276889745072024, 0.26850362306327646, -0.8822717564098468, 0.7304371275417145, 0.36057230057768264, 0.6134959344016098, -0.9726695475645226, -0.37738304775743314, 0.016626804003614826, 0.8998679619522973};
        c.predictors.emplace_back(); c.predictors.back() = {0.37311827445983403, 0.9347568961898722, -0.6027243352617608, -0.721189887805868, -0.07833950543128498, -0.7934310092589862, 0.3855272759167274, 0.8811501218634861, 0.03786696459411365, -0.7033095807285461, -0.9045759090563388, 0.9633281298031788, -0.6324138471398462, -0.5922905307196553, 0.5574739616167734, 0.3545288902326329, -0.25159863093737056, 0.22627604097831933, -0.9743140050834591, 0.006202808845699792, 0.3453206762527439, 0.3643880711758325, -0.18571410638408437, 0.24187132863843863, 0.9161917183030233, 0.9555474995512172, 0.8894141263990998, -0.47602813993985804, 0.4636387364344643, 0.675310133166007, 0.4580959590832019, 0.835232744193853, 0.07322563983983121};
        c.y = {0.4812422636762433, 0.45694266217662044, 1.2020444845872589, 0.9146258382983898, 0.8244011262257656, 0.9126124737292908, 0.48447277623180174, 0.5984925454915644, 0.6406929482229766, 0.584598525286319, 0.7584305171012286, 0.5979703739723937, 0.7050727026442573, 0.8658811604760258, 0.5169169856453815, 0.49152707257863687, 0.8002482044632966, 0.5578118986377824, 1.0787877082635147, 0.5189989188473954, 0.5154465356828695, 0.5999619752490434, 0.726587753775675, 0.8412500271484176, 0.3110767394175197, 0.40361416695184016, 0.4420982561856562, 0.6269913306331965, 0.5619694308687263, 0.5300570196857273, 0.6483758860055998, 0.6447804469785573, 0.48274371477657135};
        c.beta = {-0.4048811191277033, 0.14452508679340095, -0.08634705295984557, -0.3992138279138552};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gaussian_log";
        c.predictors.emplace_back(); c.predictors.back() = {-0.43911579399837297, -0.40679657453959517, 0.5530719429329547, 0.5829354313587118, 0.8172409614686451, -0.4840914145232589, -0.3808851952295358, -0.2956880810731264, -0.6083355085844655, -0.15398032666589878, -0.3707490357956307, -0.5748953173889548, -0.45024378356378736, -0.27324028146810253, 0.2667360701007495, 0.9481926416562618, -0.8461907744354837, -0.8027550253342393, 0.1817915999002293, 0.3852920261888768, -0.8794294566988736, -0.7902751372519434, -0.9237557388297566, -0.6009743726599042, 0.9987796226331338, -0.28864359225211556, -0.2246184135388638, -0.4832127445102037, -0.12172143962323467, 0.33770427852014917, -0.8850391919212091, 0.2211331520139863, 0.9214630639637704};
        c.predictors.emplace_back(); c.predictors.back() = {-0.08552654188191822, -0.9651664296652669, 0.34482309481952766, 0.5755905322109494, 0.8018382324786071, -0.6056702325115986, 0.4790588776478073, -0.9823259404805962, -0.44821452311138965, -0.35606131877792824, 0.5055666398272558, 0.5216364541323826, -0.3832690892339874, 0.5857476854555106, -0.3219256100718606, -0.9580870712213938, -0.558106817779499, 0.5534131991945312, -0.03519458619854743, 0.26630943372120197, 0.03823499773476069, 0.13650558033924676, -0.08254166858089196, 0.8887016813722908, -0.18480641087569438, 0.3246078365266025, -0.49886558097120637, -0.6425161009390576, -0.9455159798510235, -0.5732136524630838, -0.2794204375007978, -0.22452213328869441, -0.07914874516636017};
        c.predictors.emplace_back(); c.predictors.back() = {0.7132269165320506, 0.8066034859652293, 0.11818385635023287, -0.6565568102043748, -0.8770588811507882, -0.5853368226838089, -0.4859852150549895, -0.07593480422203647, -0.1706049849638005, 0.7792451662596398, 0.3539070036404406, 0.6202422793785245, 0.8071586764045773, 0.3852502545356786, -0.9533511029055275, 0.26375568794987014, -0.42750441638018555, -0.04186950430209424, -0.8222654207157036, -0.39084302211688216, 0.5488748719218619, 0.28149843673190733, -0.1647960374316173, -0.10049806969292052, -0.5431309197016374, -0.3079310468665619, 0.6545068058696364, -0.8874470704421666, 0.11428102084855651, 0.07136906342708005, -0.611071426770019, 0.5495655153609875, 0.2287827700084233};
        c.y = {0.5703111499600454, 0.6603983682787555, 0.5059351813686239, 0.5423754720866485, 0.5700522088979317, 0.7591172517099294, 0.5982206517822296, 0.7671910614261325, 0.6962509994177424, 0.5808877045925137, 0.4991750452152395, 0.5471641084695561, 0.5978062638713864, 0.5547094128158186, 0.7049172189421653, 0.6482020700207937, 0.826695169307692, 0.5666033573307578, 0.6812101998777949, 0.5722870105216776, 0.6091732650957516, 0.5956038569130402, 0.7080931482676585, 0.4993565261119097, 0.6232623816840582, 0.627731406976222, 0.6352311455164875, 0.8214531980696553, 0.7736311351149807, 0.6531600503360067, 0.798577235461928, 0.5577939493025824, 0.5088169984553059};
        c.beta = {-0.5097879492798034, -0.10665173101161755, -0.21666254872534554, -0.15644376545106836};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gamma_log";
        c.predictors.emplace_back(); c.predictors.back() = {-0.1519003438455493, 0.512289918423821, -0.7306095462376614, -0.3907606816846547, 0.3934405784888819, -0.22659506986988198, 0.33964934213955766, 0.17741681873476534, -0.024880605827058977, -0.42931438749846795, -0.21731230258342404, 0.8316676611221305, 0.783970531440348, 0.5675298779370073, -0.5034690437352123, -0.015407619633612368, 0.1228870711284995, 0.6335211391624094, 0.7341013184068097, -0.29305301320221133, 0.1980126892085472, 0.36471795846665733, 0.7037213993679368, -0.37109043513390483, -0.10098711546233985, 0.47988252657719954, -0.8340104971908517, 0.5533119068531136, -0.35309221028691784, 0.9355172205874871, -0.15702759240544006, 0.06985676916550343, 0.9876743484884127, 0.26072791684729424, 0.2616479473002207, 0.7308526794872343, 0.23577829998092437, -0.0021895727378082874, -0.32682627621785, 0.11003144395617159, -0.6573874036776262, -0.3405390268023314, 0.08130097522108026, 0.5843686928493748, -0.7268032019895745, 0.03241029183217048, 0.8742129960614999};
        c.predictors.emplace_back(); c.predictors.back() = {0.7691848889153219, -0.21042539189725873, 0.1412503005584882, -0.3317278772469907, -0.09727771377607541, -0.7826548785795673, -0.7523089636327374, -0.6306693685248181, 0.8063376760305068, -0.5738523543479079, -0.23124461400849894, 0.7436441928628494, 0.4241632027921294, -0.9238751867643131, -0.8470061295647671, 0.8777090553170621, -0.7418529694334526, 0.45776262598792083, -0.9207939683656725, -0.9544716124325239, 0.05315378213786803, 0.32410720452721353, -0.7321545779543563, -0.528970352931897, 0.6759069089260987, -0.7339727743013278, -0.5570995469978082, -0.14113369159122113, 0.7736017678857918, 0.1566375931675137, -0.061278656268802134, 0.2590269224548696, -0.878097809394573, 0.7002843982484377, -0.07044042962777541, 0.7891085505753652, -0.2688146923367343, -0.4762880455931544, 0.2721382658325058, -0.6412240025096427, 0.08647427650496975, -0.7668062440437597, 0.5332835787274528, -0.23565573457033628, 0.9006794922365571, 0.586184167494096, -0.026450906013598008};
        c.predictors.emplace_back(); c.predictors.back() = {0.17747906956954274, -0.6850021547620209, -0.6301770857256892, 0.26428636326389787, 0.4965274077394335, 0.2834472744052874, 0.13563786350625984, 0.34124940496646605, 0.8741166521738661, 0.34205093464425707, -0.7873866576324577, 0.018481309496181764, 0.4052546871324505, 0.21603337937178257, 0.20392524013322277, -0.19741003457313555, -0.18221308144424153, 0.06361056613622251, 0.08736685987580328, -0.8544505229161614, -0.9768028672401068, -0.16310505178933066, 0.2258382993402024, -0.7501546610329581, -0.7651182328571249, 0.1422505346271341, -0.9294037391194121, 0.23413659910001416, 0.8036661129286642, -0.9546373620331077, -0.8846999961571027, 0.5986644045722447, -0.14748114968145032, 0.11009170529878487, 0.9919756627645169, -0.8500876042037628, -0.5447457038205699, 0.07608370507731665, -0.9035884674979835, -0.05951077213715772, -0.4348231108979639, 0.28368877145401483, 0.21157853712011132, -0.05376163522455468, -0.6400196308980803, 0.8143043249122772, 0.6998606924994037};
        c.y = {0.969559606905342, 0.9514502260858793, 0.700028852098812, 0.6503015996426587, 0.6176448130768047, 0.8848180881882703, 0.4747369456842653, 0.6692374142163179, 0.7292287244930125, 0.6176925960710484, 0.8679891302397538, 0.6464932583120083, 0.6696287110187206, 0.9754002022255562, 0.6142920199047374, 1.0380340732734479, 0.6507562393857945, 0.5141554072380812, 0.6766820501179805, 0.7033807167619425, 0.7109714512771852, 0.7556114127827389, 0.6487956512133549, 0.6335904467539419, 0.653110418852427, 0.7775861689979319, 0.7425130311083347, 0.5851410668339025, 0.8394791731234094, 0.6126450376463358, 0.6667989220860547, 0.8722524271999554, 0.7310746857056818, 0.8532804880115845, 0.740497774722591, 0.7155959315409051, 0.5463547937028682, 0.7718510436789051, 0.8620111854217546, 0.5991920747122861, 0.590064046926229, 0.7368479945068085, 0.8731252650789342, 0.6544857443756095, 0.5880955194878689, 0.915581608132799, 0.696923780272602};
        c.beta = {-0.3127269137714519, -0.0364638983874009, 0.06333119730391333, 0.039654201293916794};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gaussian_log";
        c.predictors.emplace_back(); c.predictors.back() = {-0.17804267815282415, -0.25976199353892127, -0.5592453717575134, 0.1472193913665345, 0.6571977904926121, 0.7291875319670511, -0.7997440643273619, -0.5585779302740259, 0.9872817695571696, -0.7931649826683109, 0.16701378747397655, -0.9977843549366507, -0.924985112298367, 0.4063939882234031, -0.8421193997196808, 0.26414805745195613, -0.9538904446400807, 0.5166592540436934, -0.724885192583425, 0.5046451349813614, 0.9190930343721115, 0.49014739727292067, -0.6228979515049793, 0.4926791497130327, -0.0011775955866688559, -0.25270284975331214, 0.8457116103192901, 0.2709445835885511, -0.15544536390038077, -0.7544101449435361, 0.24609865731633196, -0.5711036000856538, -0.3621327308688467, 0.9922124031294453, 0.3887172724882997, 0.07953591952364514, -0.1693051368524252, -0.9565251019275267, -0.36470698596742457, -0.7948567801813045, -0.3958394978936912, -0.5810291318428074};
        c.predictors.emplace_back(); c.predictors.back() = {-0.060692421155626564, -0.05839935551628739, 0.0644344523042637, 0.6563621799979962, -0.8882732264997455, -0.7568454067840042, 0.9483012842495997, 0.3177447192992826, -0.6615184695479936, -0.05455443500262591, 0.44174022711022354, 0.2250344344327122, -0.6406408560631225, -0.9277757923291452, 0.5751791926654399, 0.4706096995666347, 0.956739891661613, 0.8925992401619618, 0.5411181971070254, 0.28207333734622364, -0.4685758339835262, -0.8818768013176725, -0.4718167428176341, 0.7026464825483891, -0.22248196774360673, 0.3499613955759451, -0.590658957564975, 0.2171630523333541, -0.2627582343692023, -0.8080221587378864, 0.5491269362846187, 0.9270230345448176, -0.9014569528527201, -0.05721411675762411, 0.7544971909307154, -0.8460161488142874, -0.7855487040114433, -0.9799322817680445, 0.0389487950480818, -0.2935178920241528, 0.06522658513982393, -0.8342154262558565};
        c.y = {0.5717148401454797, 0.6042263706182963, 0.6724313506349625, 0.5398404977057474, 0.540201758970051, 0.4685274392066443, 0.6431680376554839, 0.6751474606614739, 0.4396968251519801, 0.6984573998548543, 0.5247825379618553, 0.6909650941185099, 0.7084054908880995, 0.5415654804161337, 0.6506530745940912, 0.5658726815358394, 0.6468601954922457, 0.48816831590451204, 0.6301631114830226, 0.4590984773376015, 0.44994685885139174, 0.5353633018557794, 0.6908230872991562, 0.4738709780933897, 0.5836904552321062, 0.5691552305765143, 0.44972853341130264, 0.5367937239920936, 0.6233415736182252, 0.6773531153737944, 0.5185461906344648, 0.6211326515404506, 0.6299101018659496, 0.45700262825207966, 0.48125214376967146, 0.5474784032925751, 0.5712068020865733, 0.68902535888181, 0.6520128106334568, 0.6828662454695362, 0.6146342626549427, 0.6532954828428532};
        c.beta = {-0.5756316848504697, -0.22726385030506532, -0.03571078652302141};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gamma_log";
        c.predictors.emplace_back(); c.predictors.back() = {0.3559827293879807, 0.5167267070372599, -0.32419376165154135, -0.5188235027378272, 0.017250001625527034, 0.13919359930586284, -0.4888269819337796, 0.5056313620970261, 0.9176021753115147, -0.2833106030605461, 0.6741232751006891, 0.4782362774920843, 0.38322001340234313, -0.466010673006263, -0.1445318196706058, 0.7143600179555338, 0.22652334165045573, 0.7600858743849945, 0.9286186931732563, 0.3988810421726092, 0.06962685508824129, -0.8757514991945219, -0.6270227234767214, 0.9899876275667268, -0.5936851624280439, -0.8659050510502733, 0.2380634180938188, 0.41625039300962263, -0.04115129324225375, 0.4965195637461073, -0.6957377321828886, -0.5436950890596388, 0.8260339797675573, 0.5607754521982644, 0.4766806253837379, 0.25906820851319545, -0.17800493314212407, 0.8038141919202695, 0.3381857717450798, -0.6147801529914256};
        c.predictors.emplace_back(); c.predictors.back() = {0.30115062853323016, 0.24923282596880814, 0.4703337487007315, 0.4083384031494315, -0.008040845648763728, 0.5039985731041265, 0.5948791114577181, 0.683151393199281, 0.41564449027180284, 0.5873479075416772, 0.6309036344351067, 0.7902614995056558, -0.5724174139851275, -0.43827059486285047, -0.6851196016433865, -0.546272860166181, 0.5198192424643528, -0.24170684038815238, 0.29611438553673985, 0.7163746879370283, -0.9144380743683391, 0.714910766371698, -0.5057125296418861, 0.06482336437528446, -0.1530126398474465, -0.25333156873453966, 0.8139108149045027, 0.9613481009872227, -0.8314567476576298, -0.0563174893656766, -0.5840817535643297, 0.5196200264028108, -0.4977895661892955, -0.006927899252152647, 0.5802984325932143, -0.05423619840714333, 0.8165754322746184, -0.8961266127861605, -0.6493944907355571, -0.19076711466019391};
        c.y = {0.5964244666711678, 0.8985940563141073, 0.8543754575108833, 1.0179186020632496, 0.668347692239877, 0.6885099106872495, 0.8156927463327385, 0.6913338636803971, 0.6953358298165394, 0.7653166662608113, 0.5908187719029211, 0.7942623327602524, 0.7452837924782568, 0.8256697701920646, 0.7295697538243506, 0.8553665243436857, 0.982089466292151, 0.918356015286802, 0.8273122287941034, 0.5883306846884588, 0.9819216618376918, 0.7883056284039704, 0.4356091092784238, 0.6476448453723163, 0.5962105352502806, 0.7478903207670015, 0.9794842226603533, 0.6471567208318805, 0.5913950087111551, 0.8172910740633917, 0.6094430198588018, 0.6159832005305605, 0.6288785069848487, 0.701658565885713, 0.7462289524938736, 0.8873075715511922, 0.9017241711093312, 0.7251229311675973, 0.853825353143395, 0.8071644917940599};
        c.beta = {-0.28321443576701694, 0.010612759868814908, 0.029282239935621956};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gaussian_log";
        c.predictors.emplace_back(); c.predictors.back() = {0.7065379424172162, 0.17227710581208222, 0.3674201574794649, -0.6600744802466432, 0.23580798136112846, -0.20692501960892828, -0.5041700886169098, 0.3391050266953297, -0.2555054106438701, 0.042321044203204705, -0.3905442154386556, 0.6401792386738072, 0.6111433617532447, -0.7927813156293624, 0.13168137194231422, 0.5521579581720915, 0.2596102991262854, -0.3398233844795582, 0.6337204741445763, -0.8395918050298263, 0.19883244252011623, -0.6961888473017022, 0.32398553453658474, -0.39053351062355457, 0.8065196409527742, -0.7783055305580373, -0.19711212667377875, -0.7501330904731234, -0.8528000068674779, -0.8699696800821588, -0.6778544958237898, -0.19234560051480276, -0.6710836747634064, -0.8572490700840032, -0.42692115732412317, 0.19218051504741163, -0.10158336798462164, 0.18789478689347394, 0.14596831620510775, 0.5591680199435274, -0.08813790368597174, -0.9221177241226728, 0.0394951811212465, -0.253136324805316, -0.23722686581511665, -0.21469990809483774, 0.26484537546403186, 0.1671725512841593, -0.9981302561041892, -0.6108514288481415, 0.5040780687948601, 0.5955787743443186, 0.45995377742826915, -0.40188204254485616, -0.44997984906963695, 0.9791359870321854, 0.8860890702392463, -0.22233848793663502};
        c.predictors.emplace_back(); c.predictors.back() = {-0.21009690117268076, -0.275099385365172, -0.07021689198372005, -0.1547495106379162, 0.43799065121420044, -0.5574786028080936, 0.20390110359056735, -0.860083710867805, 0.5993013661254067, 0.5588211876056675, 0.7402662800709359, 0.5300202217619265, 0.6739093899528559, -0.08905375179507291, 0.07410569561860725, 0.07438837245635166, -0.43318333023617694, 0.5353385556075274, -0.0917685235158785, -0.22694755278601075, -0.508264872624288, 0.601930984797699, -0.8372066027059801, 0.12971190012160094, -0.19426908385866337, -0.6958584542707258, -0.42152381675992157, -0.5496814360740598, -0.4196728400011278, 0.5837295701903789, 0.8972240886423495, -0.16946711445267337, -0.22540939361894718, -0.5601365008501329, -0.8895248715218673, -0.9684865370776461, -0.586072091525752, -0.4566194632812328, -0.6730979699623245, 0.9925439327382444, -0.2802788709480777, -0.593279275518134, -0.5949552154838511, 0.9055376562749204, -0.45198132471894636, 0.8899696959383094, 0.5139795082796486, -0.0398580930809751, -0.7711780260633525, -0.36452231130173707, -0.4669887747220691, -0.3108228655297225, -0.3900151878322624, 0.14493334644934808, 0.6687499489374085, 0.5738168537270312, 0.17300958841454617, 0.9055118897487267};
        c.predictors.emplace_back(); c.predictors.back() = {-0.6481547415705264, 0.9355260436350166, -0.17357571153482065, -0.5209649036210529, -0.6866258686606566, -0.6408808241213779, 0.5619606531347736, -0.6602124532348508, -0.05641237938610355, -0.22379462788453774, 0.807428042194398, 0.11589023094690543, -0.7498928799695144, -0.4732930799191002, 0.6336798365450185, -0.2529457693404553, -0.6986764303535977, -0.3993710456707791, -0.16248227410051452, -0.7409016356012412, 0.371876409656797, 0.15312707204751708, -0.21238637094718382, -0.35804720707962767, 0.4267831048729058, 0.04945318904343643, 0.3875916229798899, 0.09539912918126126, 0.7586482685441029, 0.6449555709106345, -0.1593796352363246, -0.341239987397969, 0.0033456658539245954, -0.3980772880912955, -0.7461835643652395, -0.44262867688836716, 0.7859247479849933, 0.09848393505847475, 0.3127500746504468, 0.6904401945573189, 0.5999521276167576, 0.6836014921904223, 0.8355754208769532, -0.8020449960768632, 0.40928353676619955, 0.4761463478516046, -0.37458833974096106, -0.09689979714105923, 0.9373539341250481, -0.38365654544991545, 0.7099895808942123, 0.15444382887205355, 0.5072687674160119, 0.06853097573673583, -0.6572647471817654, 0.5612895439179728, -0.5434731187252013, 0.4256100636722133};
        c.y = {0.6411014457782956, 1.0833055213440317, 0.7307350352678139, 0.5585312427528915, 0.6019148023183127, 0.5435613518955008, 0.8301122724605371, 0.5846907951908201, 0.7681609806657003, 0.6954142162197166, 1.003376045425738, 0.8585324654947587, 0.6645660751806568, 0.5260629022686601, 0.9623941938990825, 0.7342703321890197, 0.5937653560277368, 0.6401972943839518, 0.7520567598078745, 0.47981406724488584, 0.8596519247730875, 0.7276431171012459, 0.6585568201535057, 0.6284448101364173, 0.9936472750580725, 0.6532448271599772, 0.8036324429465315, 0.6792667716687691, 0.8231314631114619, 0.8384470572277446, 0.6466891386222908, 0.658238440076442, 0.6834515889223131, 0.5351291456805022, 0.4864153599716354, 0.5984569340733404, 0.9477516006143392, 0.7961114777985692, 0.8034642063515713, 1.078972302889127, 0.9144176085080575, 0.8007845658186734, 1.0074653233241835, 0.5533860237802724, 0.8229485981439332, 0.9013369457794175, 0.7136820150549306, 0.707690770146875, 0.8731059544996883, 0.5927055886877071, 1.0036223902528267, 0.8535483287200862, 0.9508220011841627, 0.7275572111745825, 0.5665075175572217, 1.0990994470109183, 0.7232562181536571, 0.8736184099092434};
        c.beta = {-0.2964428032233676, 0.15416704929295838, 0.05369518515571571, 0.37070150495906756};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gamma_log";
        c.predictors.emplace_back(); c.predictors.back() = {0.3120234658161505, -0.5663100112282284, -0.82757952549975, -0.3537903611073161, 0.9553523131224999, 0.39299759274376145, -0.19608086153773563, -0.6719766309965658, -0.47142884328944734, -0.334294186844017, -0.9284818099525636, 0.494930274784559, -0.06392223424578836, -0.40549078335486377, -0.2427678326640308, 0.16066536269029208, -0.5318649444818033, 0.5504942707852762, 0.2361917563024234, -0.3961486170031203, 0.3351059078469778, -0.4783199948012089, 0.13210191597055054, -0.18498031097798795, -0.8923402895444172, 0.6328115596485875, -0.8581023897403772, -0.9990237221984459, 0.9512377046856364, 0.2098554658478582, -0.5728227159772292, -0.5224150474403932, 0.7395112260877459, -0.25599558424130775, 0.04227199905496737, -0.3036361132300609, -0.7494343112376931, -0.014156053672442326, 0.1632011819967638, -0.15952840434954285, -0.11079728300751746, 0.506460119592095, 0.6415706117219788, -0.37596418481495353};
        c.predictors.emplace_back(); c.predictors.back() = {0.35681544436222, 0.6250712137894612, 0.6191677140113272, -0.05360035920533779, -0.6623413184044811, 0.36966809442979054, -0.838677186605675, -0.3469208101530963, 0.8698700327103688, 0.7267964891098735, 0.7906254622214481, 0.09484456403942021, -0.9727028750957945, -0.7540226332650777, 0.8278357977095472, -0.7541819498536526, -0.3390465190975387, -0.11260703910689562, -0.7141632255860433, 0.5472825174450433, 0.23657008472956087, -0.9683238769971887, -0.27755989781486723, -0.05552714206024878, 0.9580712810612639, -0.31972761780355197, 0.8499689752255288, 0.446792493034587, -0.8818539374105734, -0.44805512098108213, 0.9918198511847653, 0.808319680236232, -0.0028776954657685483, -0.9412501164484668, -0.67189029438032, -0.9159611682223765, 0.8039909549650224, 0.16978479745643393, -0.753492730093299, -0.6663863698866994, 0.6264339156678507, 0.6780157175524868, 0.4527890831256607, 0.7084703792908336};
        c.y = {0.7059489355227789, 0.5250216952774568, 0.523651097923421, 0.7600543081516827, 0.6711478567784842, 0.7875488620691333, 0.5656136097976867, 0.5640462291195781, 0.7707150496274774, 0.664071814457598, 0.6653864899965992, 1.1153259088494587, 0.4795953346539675, 0.7053945032073711, 0.5603577880756337, 0.5852240522044497, 0.608579034851852, 0.8926327587988766, 0.7417439939421244, 0.765058749420324, 0.589799477881854, 0.3556813319930449, 0.7641430730167049, 0.7725104985463755, 0.6740115790759726, 0.6856410163250417, 0.6584703674256214, 0.6488248332811665, 0.6265868297590851, 0.4889916485048923, 0.7682374676625485, 0.5728398822225677, 0.7283473229385573, 0.4929221120935235, 0.6532161805542599, 0.6633799343413178, 0.5975024996809294, 0.5963549093691364, 0.5561738822572478, 0.6744933675610958, 0.7025665663638245, 0.6774539807668465, 0.6286898213165871, 0.7385836152855961};
        c.beta = {-0.4071531086522966, 0.1547721177492392, 0.12333492910653002};
        cases.push_back(std::move(c));
    }
    {
        GlmOracleCase c;
        c.family = "glm_gaussian_log";
        c.predictors.emplace_back(); c.predictors.back() = {0.8349310723204404, 0.8507979908645436, 0.5709530173226727, 0.040035088348454595, -0.44198634364372746, -0.6540904246969437, -0.10877077181514183, -0.6051406784320474, -0.5308448676664319, -0.2986670790286843, -0.9723406139185737, -0.32755751161117863, 0.08231995275848991, -0.15839677348485726, -0.5180503892565607, 0.20168462227684092, 0.9513190758921375, 0.6220932276754536, -0.3841072134889676, -0.4177055433874921, 0.03788413177116823, 0.6929556275201023, -0.06706534549701626, -0.24121637247487637, 0.3938830164358311, -0.30907352657712095, -0.4742389642088367, -0.5356912639600899, 0.31703981840043793, 0.49484005613046667, -0.9870165064257512, 0.47717946432861025, -0.4825233949973833};
        c.predictors.emplace_back(); c.predictors.back() = {-0.5527279149214273, -0.02642962255649728, -0.8398931640048397, 0.426676150437199, 0.25584172096600577, 0.19401493810962878, -0.7336577688116599, -0.7949316335635705, 0.03055370900912524, 0.20648320485470917, -0.10020384715248731, 0.5311091770805292, -0.225675264452059, 0.30455978710784226, 0.6610891646394672, -0.1084031795229623, -0.20021739024103735, 0.864550470951807, -0.15199492780055768, 0.8942003406089554, 0.34951067564007365, 0.9830903945776459, 0.7183126034166436, 0.492805203234725, -0.9043101451992062, -0.7602995996164856, 0.46691179346872436, -0.28602162884306503, 0.1419027408988387, 0.29148475560706144, 0.5921801462250293, -0.33556645445701494, -0.6659012266206865};
        c.y = {0.9494705712415555, 0.7514067076281631, 1.0271890371364194, 0.604205022284977, 0.6012893633306625, 0.6170459793354989, 0.9362999355100956, 0.9014282918153151, 0.6928817899143536, 0.6616775779143163, 0.6825800537045689, 0.5576732588213282, 0.8112799794587904, 0.6309206537046059, 0.5227576003866008, 0.7384148981793542, 0.8124413473712583, 0.5302407265752033, 0.7244307174381177, 0.4925766916722719, 0.6347765728658593, 0.4867645520654552, 0.5358109795554863, 0.5393431663724455, 1.066637415597121, 0.9170341252669446, 0.5815552953500618, 0.7684739521113968, 0.6823116247808888, 0.6861155979262323, 0.5452277840775733, 0.8708075843609121, 0.8628921499951958};
        c.beta = {-0.34153332337810804, 0.08215278039491825, -0.38862032692087894};
        cases.push_back(std::move(c));
    }
    return cases;
}

struct OlsOracleCase {
    std::vector<std::vector<double>> predictors;
    std::vector<double> y;
    std::vector<double> beta;
    std::vector<double> se;
    double sigma;
};

inline OlsOracleCase ols_oracle_case() {
    OlsOracleCase c;
    c.predictors.emplace_back(); c.predictors.back() = {3.226395969764159, 2.056373083936304, 7.470701434094126, 5.415532750790707, 6.981576001633493, 0.5821128816549848, 2.1828947954931746, 1.775809676765645, 8.236145966655505, 1.8378962213889838, 1.5482938485467956, 7.909479394760471, 5.435536095297707, 7.45782265693439, 5.347397135771436, 4.9102314859794385, 4.434550836830297, 6.342267509191224, 8.24229354651076, 5.411648805426765, 1.4272951375955811, 0.9704186311420571, 8.318240137931856, 9.608255250289762, 8.86637346983875, 8.530506984766458, 5.646568115404579, 2.2269628394271113, 1.2685063243430927, 6.069352023530184, 3.973146539479848, 0.8278911138060185, 7.64561270561969, 0.926148795185957, 0.7047750785244955, 7.590912996648789, 2.434423081580505, 1.33164986866106, 5.073996319823805, 7.14460082049416};
    c.predictors.emplace_back(); c.predictors.back() = {5.894203691226595, 3.8358843164127943, 2.3383780183840344, 1.9322649082108134, 3.086367650589824, 6.837626332658563, 2.4355847020179047, 5.17733708675559, 1.7960787059979944, 8.085094219959876, 1.531519515259212, 1.0840225589094798, 2.26506959528019, 5.530128374799133, 1.222374353291532, 8.960361198027583, 8.016199689110048, 1.0502661028737648, 7.508999258940408, 0.6615783663140362, 9.046359542243218, 3.5642619336942136, 2.5227728956998496, 5.506156220582625, 3.3000219414371292, 3.2752130530988577, 2.042709338332851, 8.735970947498755, 7.17741970641222, 1.5300499562120284, 3.1772320392510824, 7.547432062286267, 0.9566515423806932, 0.2495474300927325, 0.656660883185487, 6.155010818029465, 5.495988064148633, 4.703255586025781, 4.3271844807066175, 7.454144122171876};
    c.y = {1.6435410495877205, 1.9895420913979693, 1.2036434960105207, 1.6843773366585677, 1.4591700175755964, 2.8577552722549404, 1.923887079964264, 2.649457887648641, -0.1499988117536677, 3.1686215886696925, 1.8915159367799683, -0.20495178131322145, 1.2015048276771036, 0.7999963671468963, 0.7993637313295919, 2.024862923147681, 2.733877674000315, 0.7025915214002917, 0.7870938925386006, 0.647893887325671, 3.252958126683261, 3.2709269258059464, 0.14305617721434563, 0.3184690878105797, -0.1520058535867822, -0.26971805992690157, 0.76252782416476, 2.7242109960196417, 3.0082569975510056, 0.38831837078501297, 2.0313910530998682, 3.3417381054219817, -0.005024383919875308, 1.9233141441180173, 2.5047902228591203, 0.6915894830162101, 2.3460641601524936, 3.415549349205032, 1.5729789205728693, 1.871432988128268};
    c.beta = {2.4387390160406905, -0.3165790320044826, 0.14836768412367946};
    c.se = {0.16543554690693119, 0.02165926065511693, 0.022931539289704463};
    c.sigma = 0.3771744507657556;
    return c;
}

struct LmmOracleCase {
    std::vector<std::vector<double>> predictors;
    std::vector<double> y;
    std::vector<int> cluster;
    std::vector<double> beta;
    double var_between;
    double var_within;
};

inline LmmOracleCase lmm_oracle_case() {
    LmmOracleCase c;
    c.predictors.emplace_back(); c.predictors.back() = {0.6215781602649437, -0.6487735709246256, -0.7155476632598741, 0.09444563929821137, 0.21394198108468987, 0.8343720064445315, 0.7774370018942494, -0.3281401146543612, 0.6145062912309112, 0.798303696642142, -0.806713733322578, 0.6335145414522165, -0.8584552765901441, 0.2615602317620598, 0.21583065073200536, 0.9461167074226298, 0.7047131966801721, -0.7263488594319165, 0.35118625578631923, 0.7939219197687537, -0.8113618790465351, -0.43255964579934636, 0.6195168760177443, -0.42692030696080563, 0.4294062437047901, -0.538975100013591, -0.3766733357743821, -0.9371840210626345, -0.38600384058222814, 0.18087744526230276, -0.36682363781521654, -0.21923092738788053, -0.8377681764026368, 0.4423946662070517, 0.4984852018015635, 0.8237996833057115, 0.36760276882082876, -0.7875061751905283, -0.6941751199021509, -0.9068050678289632, 0.8442955293601744, 0.9850463974567314, -0.5923458369305026, 0.7178080680217347, 0.8731030156128028, -0.19275180167911388, 0.32105652077489855, -0.21955422531182744, 0.39363442934788595, -0.865081585585576, 0.30035953428183126, 0.27237501927066243, 0.433003669676318, -0.964240977630201, -0.2934299399725433, -0.11636221180232309, 0.14451452808130316, -0.25581034228873145, 0.8666330105294322, 0.12230434184622196};
    c.predictors.emplace_back(); c.predictors.back() = {-0.9603056708932913, -0.39188566580303164, 0.4843336344812701, -0.23274947905959098, 0.45809275207045497, 0.4359372948396445, -0.42994977034435244, 0.8480347163569928, 0.014317231975778277, 0.2043913067195713, 0.03187524930240282, 0.3662837970245467, -0.05425029758339539, 0.9631711004252099, -0.24333758117928772, 0.7406682313980253, 0.011494104935066751, 0.9320878514900359, -0.5106277829845656, -0.6564174719167122, 0.15604640467206599, 0.39293177604573315, -0.7007160635771885, -0.5773278252512897, -0.7143265979390871, -0.40713987058922996, -0.818540044212918, 0.3810699975294807, 0.26147700767135484, -0.9385203334635464, 0.6375925236414608, -0.14106929918622724, 0.6064548796414833, -0.3172007005798847, 0.6853318031619855, -0.06713918348742487, 0.26432534118873185, 0.2619968377394537, -0.7622714278530476, 0.28097316024086716, 0.9567928580212341, -0.30019441902155375, 0.3324782599828957, -0.5370532560844135, 0.4144341101899316, -0.4103938417047912, -0.78487343267579, 0.9949166443477697, 0.7027056105435809, 0.2544192144515578, 0.530546067079535, -0.9832064213967358, 0.63755127925891, 0.2654146125561698, -0.8483521747952645, 0.7727262174096534, -0.06319698579362143, 0.42112504716203736, 0.3504988351451628, -0.5654460446194944};
    c.y = {1.0507102398772854, 0.17218627617661622, 0.20142714013200044, 0.531586879831489, 0.06668347584601175, 0.7242060156271135, 0.6239473891231897, -0.12905741656715686, 0.5807357074711657, 0.5246051111194029, 0.6853596478106786, 0.895483740334628, 0.9806725705446371, 0.28312375043481075, 0.693457127387711, 0.6737745996365565, 1.2602227562839556, 0.21452974663179247, 1.32372953461448, 1.201688078497744, -0.34105358534970737, -0.49028780314624554, 0.7311520857176228, -0.056177476824566586, 0.9721081011898416, 0.6732587985930839, 0.5241837561274023, 0.3872682581758965, 0.31747081784042114, 1.1810092055106016, -0.35831756225304745, 0.5150169720780897, -0.42893982904784095, 0.8267550594986944, 0.2172200335525975, 0.7360680099559218, 0.6058104702694753, 0.3692806906055052, 0.37488202268139015, 0.4707469038012108, 0.9476566659619541, 1.0340075497235732, 0.6255994852161195, 1.5822654530316609, 1.3599818143093447, 0.8374032846240999, 0.997077818678856, 0.2438258013802335, 0.03779211065279281, 0.39366280484625815, 0.8783151041543756, 1.8580010961449203, 0.8564369862977045, 0.9764787955824379, 1.0517195088026803, 0.4376360536489447, 0.7621171068353483, 0.47021228203404125, 0.7099709201993536, 0.9560292297984953};
    c.cluster = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 11, 11, 11, 11, 11};
    c.beta = {0.6220919065508608, 0.2827912678429057, -0.43349874812090755};
    c.var_between = 0.07441827386664927;
    c.var_within = 0.050307870606971374;
    return c;
}
