#include "csumm/vocab.hpp"

namespace csumm {

// Embedded word list for the default EnglishDictionary: common English plus
// programming-domain vocabulary, lowercase alphabetic only. Deliberately
// excludes fragments ("re", "er", "ed") that would wreck decomposition of
// words like "returning", and inflected -ing/-s forms the split rules are
// meant to produce.
const char* embedded_word_list() {
  return
      "a able abort about above absolute abstract accept access account across act action "
      "active actual adapt adapter add address adjust admin advance advice affect after again "
      "age agent ago agree ahead air alarm album alert alias align alive all alloc allocate "
      "allow almost alone along alpha already also alter although always among amount an anchor "
      "ancient and angle animal annotation answer any anything apart appear append apple apply "
      "approve april arch archive area argue argument arm around arrange array arrive arrow art "
      "article ascii ask assert assign assume async at atom atomic attach attempt attend "
      "attribute audio august aunt author auto autumn average avoid await awake award aware "
      "away awful baby back backend background backup bad badge bag bake balance ball banana "
      "band bank bar barely base basic basket batch bath battle beach bean bear beat beauty "
      "became because become bed beer before began begin behavior behind believe bell belong "
      "below bench bend benefit beside best bet beta better between big binary bind bird birth "
      "bit bite bitter black blade blame blank blind block blob blood blow blue board boat body "
      "bold bone book bool boolean boot border born borrow boss both bother bottle bottom "
      "bought bound boundary bowl box boy brain branch brave bread break breath brick bridge "
      "brief bright bring broad broadcast broken brother brown browser brush bubble bucket "
      "budget buffer bug build builder bulk bundle bus busy but button buy by byte cabin cable "
      "cache cake calc calculate calendar call callback caller came camera camp can canal "
      "cancel candidate candle cannot canvas cap capacity capital captain capture car card care "
      "career careful caret carpet carry case cast cat catalog catch category cattle caught "
      "cause ceiling celebrate cell cent center central century certain chain chair challenge "
      "chance change channel chapter char character charge chart cheap check checkbox checker "
      "checksum cheese chest chicken chief child children choice choose chose chunk church "
      "cipher circle circus citizen city civil claim class classic clean cleaner cleanup clear "
      "click client climb clip clipboard clock clone close cloth cloud cluster coach coal coast "
      "coat code codec coffee coin cold collect collection collector college color column "
      "combine come comfort comma command comment commit common compact company compare compat "
      "compile compiler complain complete complex component compose compress compute concat "
      "concern concert conclude concrete condition conduct confident config configure confirm "
      "conflict congress connect connection connector console consider consist console const "
      "constant constraint construct consumer contact contain container content contest context "
      "continue contract control controller convert converter convince cook cookie cool coord "
      "copy core corn corner correct cost cotton couch could council count counter country "
      "couple courage course court cousin cover cow crash craft cream create creator credit "
      "crew crime critical crop cross crowd crown crypto cruel cry culture cup cure curious "
      "current cursor curtain curve custom customer cut cycle dad daemon dance danger dark data "
      "database date daughter dawn day dead deadline dear death debate debug decade december "
      "decide decimal decision declare decode decoder decrement deep deer default defend defer "
      "define degree delay delegate delete deliver delta demand demo dentist deny depend deploy "
      "depth derive descriptor deserve design desire desk desktop despite dessert destination "
      "destiny destroy detach detail detect device dialog dict dictionary die diet diff digest "
      "dig digit dimension dinner direct direction directory dirty disable discard dish disk "
      "dispatch display distance distant divide do doc doctor document dog dollar domain done "
      "door dot double doubt down download dozen draft drag dragon drain drama draw dream dress "
      "drink drive driver drop dry duck due dull dump duplicate duration during dust duty "
      "dynamic each eager ear early earn earth east easy eat echo economy edge edit editor "
      "effect effort egg eight either elder elect element eleven else embed emit employ empty "
      "enable encode encoder encrypt end enemy energy engage engine enjoy enough ensure enter "
      "entire entity entry enum env environment equal equip era erase error escape essay estate "
      "estimate etc eve even evening event ever every everything evil exact exam example except "
      "exchange excite excuse exercise exist exit expand expect expense experience expert "
      "explain explore export express extra eye face fact factor factory fail fair faith fall "
      "false fame family famous fan fancy far farm farmer fast fat fate father fault favor fear "
      "feast feature february feed feel fell fellow felt fence festival fetch fever few field "
      "fierce fifteen fifth fifty fight figure file fill film final finance find fine finger "
      "finish fire firm first fish fit five fix flag flame flash flat flavor flesh flight float "
      "flood floor flour flow flower fluid fly focus fold folk follow fond food fool foot for "
      "force foreign forest forever forget forgive fork form formal format former fort fortune "
      "forty forum forward fought found four fourth fox fraction fragile frame free freedom "
      "freeze frequent fresh friend frog from front fruit fuel full fun function fund funny fur "
      "future gain game gap garage garbage garden gas gate gather gave general generate generic "
      "gentle genuine get ghost giant gift girl give glad glass global glory glove go goal goat "
      "gold golden gone good got grace grade grain grand grant grape grass grave gray great "
      "green greet grew grid grief grin grip ground group grow growth guard guess guest guide "
      "guilt guitar gun guy habit had hair half hall hand handle handler hang happen happy "
      "harbor hard harm harvest has hat hate have hay he head header health heap hear heard "
      "heart heat heavy heel height held hell hello help helper hen her here hero hidden hide "
      "high hill him hint hip hire his history hit hold hole holiday hollow holy home honest "
      "honey honor hook hope horn horror horse hospital host hot hotel hour house how however "
      "huge human humble humor hundred hunger hunt hurry hurt husband i ice icon idea ideal "
      "identify idle if ignore ill image imagine import impress improve in inch include income "
      "increase indeed indent index inform initial injure inner input insect insert inside "
      "insist inspect inspire install instance instant instead instrument insurance intend "
      "intense interest internal interval into invent invest invite involve iron is island "
      "issue it item its jacket january job join joint joke journal journey joy judge juice "
      "july jump june jungle junior jury just keen keep kept kernel key keyboard kick kid kill "
      "kind king kiss kitchen knee knew knife knock know known label labor lack ladder lady "
      "laid lake lamp land lane language large laser last late later laugh launch law lawyer "
      "layer layout lazy lead leader leaf league lean learn least leather leave lecture led "
      "left leg legal legend lemon lend length lens less lesson let letter level library "
      "license lid lie life lift light like limit line linear link lion lip liquid list listen "
      "listener literal little live load loader loan local locale locate lock log logger logic "
      "lonely long look lookup loop loose lord lose loss lost lot loud love low lower luck "
      "lucky lunch machine mad made magic mail main major make male man manage manager manner "
      "manual many map mapper march margin mark marker market marry mask mass master match "
      "matcher material math matrix matter mature may maybe me meal mean measure meat medal "
      "media medium meet melt member memory mention menu mercy mere merge merit merry mess "
      "message meta metal meter method metric middle midnight might mild mile milk mill mind "
      "mine mini minor minus minute mirror miss mix mixer mixture mobile mock modal mode model "
      "modern modest modify module moment monday money monitor monkey monster month moon moral "
      "more morning most mother motion motor mount mountain mouse mouth move movie much mud "
      "multi murder muscle museum music must mutex my mystery nail name narrow nation native "
      "nature nav navy near nearby neat neck need needle negative neighbor neither nerve nest "
      "nested net network neutral never new news next nice nickel niece night nil nine no noble "
      "nobody nod node noise nominate none noon nor normal north nose not note nothing notice "
      "notify novel november now nowhere null number nurse nut oak obey object obtain obvious "
      "occasion occur ocean october octet odd of off offer office officer official offset often "
      "oil okay old older olive omit on once one onion only onto opcode open opera operand "
      "operator opinion oppose optimize option or orange orbit order ordinal ordinary organ "
      "organize origin original other ought ounce our out outcome outer output outside oval "
      "oven over overall overflow overlay override owe owl own owner ox oxygen pace pack "
      "package packet pad padding page paid pain paint pair palace pale palm pan panel panic "
      "pants paper parade paragraph parallel pardon parent park parse parser part partial "
      "partition party pass passage passenger password past paste pat patch path patience "
      "patient pattern pause paw pay payload peace peak pear pearl peculiar peer pen penalty "
      "pencil pending people pepper per percent perfect perform perhaps period permission "
      "permit persist person pet phase phone photo phrase piano pick picnic picture pie piece "
      "pig pile pilot pin pine pink pint pioneer pipe pipeline pitch pity pivot pixel pizza "
      "place plain plan plane plant plastic plate platform play player please pleasure plenty "
      "plot plugin plus pocket poem poet point pointer poison policy polish polite poll pond "
      "pony pool poor pop popular porch port portal portion pose position positive possess "
      "possible post pot potato pound pour poverty powder power praise pray prefer prefix "
      "premium prepare presence present preset press pretend pretty prevent preview previous "
      "price pride priest primary prime prince princess print printer principle priority "
      "prison private prize probe problem proceed process processor produce producer product "
      "profile program progress project promise prompt proof proper property protect protocol "
      "prototype proud prove provide provider proxy public publish pull pulse pump pupil puppy "
      "pure purge purple purpose pursue push put puzzle quality quantity quarter queen query "
      "quest question queue quick quiet quit quota quote rabbit race rack radio radius rail "
      "rain raise random range rank rapid rare rate rather ratio raw reach react read reader "
      "ready real reason receive receiver record recover rect rectangle red redirect redo "
      "reduce refer reference refresh region register registry reject relation relative release "
      "reload remain remote remove render renderer repair repeat replace replay reply report "
      "repository request require reserve reset resize resolve resolver resource response rest "
      "restore result resume retain retry return reverse revert review revision reward rhythm "
      "ribbon rice rich rid ride right ring river road roast rob rock rocket rod rode role roll "
      "roof room root rope rose rotate rough round route router row royal rub rubber rude rug "
      "ruin rule run runner runtime rush rust sad saddle safe safety said sail sake salad "
      "salary sale salmon salt same sample sand sang sat satisfy sauce save saw say scale scan "
      "scanner scare scatter scene schedule scheduler schema scheme scholar school science "
      "scissors scope score scratch screen script scroll sea seal search season seat second "
      "secret section sector secure security see seed seek seem seen segment seldom select "
      "selection selector self sell senate send sender senior sense sensor sent sentence "
      "separate september sequence serial series serious serve server service session set "
      "setting setup seven several severe sew shade shadow shall shame shape share shared shark "
      "sharp she sheep sheet shell shift shine ship shirt shock shoe shook shoot shop shore "
      "short should shoulder shout show shower shrink shut sick side sight sign signal "
      "signature silence silent silk silly silver similar simple sin since sing single sink sir "
      "sister sit site six sixty size skill skin skip skirt sky sleep slice slide slider slight "
      "slip slope slot slow small smart smell smile smoke smooth snake snap snapshot snow so "
      "soap soccer social society sock socket soda sofa soft soil sold soldier solid solution "
      "solve solver some son song soon sore sorrow sorry sort soul sound soup sour source south "
      "space span spare spawn speak spear spec special speech speed spell spend spent spider "
      "spin spirit spite split splitter spoke spool spoon sport spot spread spring sprite "
      "square stack staff stage stair stale stamp stand standard star stare start state "
      "statement static station status stay steady steal steam steel steep steer stem step "
      "stern stick stiff still stir stock stone stood stop storage store storm story stove "
      "straight strange stranger strategy straw stream street strength stretch strict stride "
      "strike string strip stroke strong struck struct structure struggle stub student study "
      "stuff stupid style subject submit subset success such sudden suffer suffix sugar suggest "
      "suit suite sum summary summer sun super supper supply support suppose sure surface "
      "surprise surround survey suspend swallow swam swap swear sweat sweep sweet swell swift "
      "swim swing switch sword symbol sympathy sync syntax system tab table tag tail take taken "
      "tale talk tall tank tap tape target task taste taught tax tea teach teacher team tear "
      "teeth telephone television tell temp temper temperature template temple ten tender "
      "tensor tent term terminal terrible test tester text texture than thank that the theater "
      "thee their theme them then theory there these they thick thief thin thing think third "
      "thirst thirteen thirty this thorough those though thought thousand thread threat three "
      "threshold threw throat throne through throw thumb thunder thus tick ticket tide tie "
      "tiger tight tile till timber time timeout timer timestamp tin tiny tip tired title to "
      "tobacco today toe together toggle token told tomato tomorrow ton tone tongue tonight "
      "too took tool toolbar tooth top topic tore torn toss total touch tour toward towel tower "
      "town toy trace track tracker trade traffic trail train trainer transaction transfer "
      "transform transit translate transport trap travel tray treasure treat tree tremble trial "
      "tribe trick trigger trim trip troop trouble truck true trust truth try tube tune tunnel "
      "tuple turn tutor twelve twenty twice twin twist two type uncle under undo unicode "
      "uniform union unique unit universal universe unknown unless unlock until unusual up "
      "update upgrade upload upon upper urge urgent url us usage use used user usual util "
      "utility vacation vain valid validate validator valley value van vanish vapor variable "
      "variant variety various vast vector vegetable vendor verb verbose verify verse version "
      "vertex vertical vessel veteran very victim victory video view viewer village vine "
      "violence violent violet virtual virtue visible vision visit visitor visual voice void "
      "volcano volume vote vowel voyage wagon waist wait wake walk wall wander want war warm "
      "warn warning was wash waste watch watcher water wave way we weak wealth weapon wear "
      "weather weave web wedding week weight weird welcome well went were west wet whale what "
      "whatever wheat wheel when whenever where whether which while whip whisper whistle white "
      "who whole whose why wicked wide widget width wife wild will willing win wind window wine "
      "wing winter wipe wire wisdom wise wish witness wolf woman women won wonder wood wooden "
      "wool word wore work worker world worm worn worry worse worship worst worth would wound "
      "wrap wrapper wrist write writer wrong yard yarn year yellow yes yesterday yet yield you "
      "young your youth zebra zero zone zoom";
}

}  // namespace csumm
