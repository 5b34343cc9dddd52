# Multi-character Mandarin words shipped with the resource bundle.
# Line format: word:POS[:pinyin override, space separated].
# Without an override the reading is the concatenation of each character's
# default reading. POS tags come from the 11-tag set n v a d p c u m q r x.
#
# 洒满 is intentionally absent: the demo sentence 欢声笑语洒满村庄 must
# segment as 欢声笑语 / 洒 / 满 / 村庄 under forward maximum matching.

WORD_BLOCK = """
欢声笑语:n
村庄:n
打开:v
设置:v:she4 zhi4
我们:r
你们:r
他们:r
她们:r
它们:r
咱们:r
人们:n
什么:r
怎么:r
这么:r
那么:r
多少:r
哪里:r
这里:r
那里:r
这个:r
那个:r
哪个:r
自己:r
大家:r
别人:r
今天:n
明天:n
昨天:n
现在:n
以前:n
以后:n
时候:n:shi2 hou5
时间:n
小时:n
分钟:n
星期:n
月亮:n:yue4 liang5
太阳:n:tai4 yang2
天气:n
下雨:v
下雪:v
刮风:v
春天:n
夏天:n
秋天:n
冬天:n
早上:n
晚上:n:wan3 shang5
中午:n
上午:n
下午:n
夜里:n
去年:n
明年:n
今年:n
世界:n
中国:n
北京:n
上海:n
美国:n
英国:n
国家:n
城市:n
农村:n
地方:n:di4 fang5
学校:n
大学:n
中学:n
小学:n
教室:n
老师:n
学生:n:xue2 sheng5
同学:n
朋友:n:peng2 you5
先生:n:xian1 sheng5
小姐:n
女士:n
医生:n
护士:n
工人:n
农民:n
司机:n
警察:n
父亲:n
母亲:n
爸爸:n
妈妈:n
哥哥:n
弟弟:n
姐姐:n
妹妹:n
爷爷:n
奶奶:n
叔叔:n
阿姨:n
儿子:n
女儿:n:nv3 er2
孩子:n:hai2 zi5
妻子:n:qi1 zi5
丈夫:n
家庭:n
家人:n
身体:n
眼睛:n:yan3 jing5
耳朵:n:er3 duo5
鼻子:n:bi2 zi5
嘴巴:n
头发:n:tou2 fa4
手机:n
电话:n
电脑:n
电视:n
电影:n
电灯:n
电子:n
音乐:n:yin1 yue4
歌曲:n
声音:n
新闻:n
报纸:n
杂志:n
书包:n
铅笔:n
钢笔:n
本子:n:ben3 zi5
课本:n
作业:n
考试:n
问题:n
答案:n
办法:n
方法:n
事情:n:shi4 qing5
工作:n
生活:n
生命:n
生意:n:sheng1 yi5
经济:n
文化:n
历史:n
科学:n
技术:n
艺术:n
语言:n
汉语:n
英语:n
文字:n
故事:n:gu4 shi5
小说:n
诗歌:n
画儿:n
图画:n
照片:n:zhao4 pian4
颜色:n
红色:n
黄色:n
蓝色:n
绿色:n
白色:n
黑色:n
米饭:n
面条:n:mian4 tiao2
饺子:n:jiao3 zi5
包子:n:bao1 zi5
馒头:n:man2 tou5
鸡蛋:n
牛奶:n
咖啡:n
茶叶:n
啤酒:n
苹果:n:ping2 guo3
香蕉:n
西瓜:n
葡萄:n:pu2 tao5
蔬菜:n
水果:n
东西:n:dong1 xi5
衣服:n:yi1 fu5
裤子:n:ku4 zi5
裙子:n:qun2 zi5
鞋子:n:xie2 zi5
帽子:n:mao4 zi5
袜子:n:wa4 zi5
房子:n:fang2 zi5
房间:n
厨房:n
客厅:n
卧室:n
桌子:n:zhuo1 zi5
椅子:n:yi3 zi5
沙发:n
床单:n
窗户:n:chuang1 hu5
门口:n
钥匙:n:yao4 shi5
汽车:n
火车:n
飞机:n
轮船:n
自行车:n
公共汽车:n
出租车:n
地铁:n
车站:n
机场:n
马路:n
街道:n
公园:n
商店:n
超市:n
市场:n
银行:n:yin2 hang2
邮局:n
医院:n
饭店:n
宾馆:n
公司:n
工厂:n
办公室:n
图书馆:n
体育场:n
动物:n
植物:n
老虎:n:lao3 hu3
狮子:n:shi1 zi5
大象:n
猴子:n:hou2 zi5
熊猫:n
兔子:n:tu4 zi5
鸭子:n:ya1 zi5
鱼儿:n
鸟儿:n
花儿:n
草地:n
树木:n
树林:n
森林:n
河流:n
湖泊:n:hu2 po1
大海:n
海洋:n
山坡:n
高山:n
土地:n
石头:n:shi2 tou5
空气:n
阳光:n
月光:n
星星:n:xing1 xing5
云彩:n:yun2 cai5
雨水:n
雪花:n
风景:n
环境:n
地球:n
宇宙:n
心情:n
感情:n
爱情:n
友谊:n
希望:n
理想:n
梦想:n
勇气:n
力气:n:li4 qi5
力量:n:li4 liang5
精神:n:jing1 shen2
思想:n
意见:n:yi4 jian4
意思:n:yi4 si5
消息:n:xiao1 xi5
信息:n
知识:n:zhi1 shi5
经验:n
能力:n
水平:n
成绩:n
进步:n
错误:n
困难:n:kun4 nan5
危险:n
安全:n
健康:n
幸福:n
快乐:a:kuai4 le4
高兴:a:gao1 xing4
开心:a
伤心:a
难过:a:nan2 guo4
生气:v:sheng1 qi4
着急:a:zhao2 ji2
害怕:v:hai4 pa4
担心:v
放心:v
小心:a
认真:a
努力:a
聪明:a:cong1 ming5
笨拙:a
勤劳:a
懒惰:a
勇敢:a
诚实:a:cheng2 shi2
善良:a
美丽:a
漂亮:a:piao4 liang5
好看:a
难看:a:nan2 kan4
干净:a:gan1 jing4
整齐:a
安静:a
热闹:a:re4 nao5
舒服:a:shu1 fu5
方便:a:fang1 bian4
便宜:a:pian2 yi5
昂贵:a
新鲜:a:xin1 xian1
好吃:a
好喝:a
有名:a
有趣:a
重要:a
主要:a
特别:a
普通:a
简单:a
复杂:a
容易:a:rong2 yi4
明白:v:ming2 bai5
清楚:a:qing1 chu5
模糊:a:mo2 hu5
奇怪:a
正常:a
正确:a
合适:a:he2 shi4
严格:a
严重:a
轻松:a
紧张:a
忙碌:a
辛苦:a
疲劳:a
饥饿:a
口渴:a
寒冷:a
温暖:a
凉快:a:liang2 kuai5
暖和:a:nuan3 huo5
炎热:a
潮湿:a
干燥:a
明亮:a
黑暗:a
光明:a
伟大:a
巨大:a
宽阔:a
狭窄:a
遥远:a
附近:n
周围:n
旁边:n:pang2 bian1
前面:n:qian2 mian4
后面:n:hou4 mian4
上面:n:shang4 mian4
下面:n:xia4 mian4
里面:n:li3 mian4
外面:n:wai4 mian4
中间:n
左边:n:zuo3 bian1
右边:n:you4 bian1
东边:n
西边:n
南边:n
北边:n
方向:n
位置:n:wei4 zhi4
距离:n
速度:n
重量:n:zhong4 liang4
数量:n:shu4 liang4
质量:n:zhi4 liang4
大小:n
长短:n:chang2 duan3
高低:n
深浅:n
开始:v
结束:v
继续:v
停止:v
出发:v
到达:v
回来:v:hui2 lai2
回去:v:hui2 qu4
出来:v
出去:v
进来:v
进去:v
起来:v:qi3 lai2
起床:v
睡觉:v:shui4 jiao4
吃饭:v
喝水:v
喝茶:v
做饭:v
洗澡:v
洗脸:v
刷牙:v
穿衣:v
上班:v
下班:v
上课:v
下课:v
上学:v
放学:v
放假:v:fang4 jia4
开会:v
开车:v
坐车:v
骑车:v
走路:v
跑步:v
散步:v:san4 bu4
游泳:v
爬山:v
唱歌:v
跳舞:v
画画:v
写字:v
读书:v:du2 shu1
看书:v
看报:v
看病:v
学习:v
复习:v
预习:v
练习:v
教学:v:jiao4 xue2
教育:v:jiao4 yu4
毕业:v
工作:v
劳动:v
休息:v:xiu1 xi5
睡眠:n
打球:v
踢球:v
比赛:v
运动:v
锻炼:v
旅游:v
旅行:v
参观:v
访问:v
见面:v:jian4 mian4
握手:v
说话:v
讲话:v
谈话:v
聊天:v
讨论:v
商量:v:shang1 liang5
研究:v
调查:v:diao4 cha2
检查:v
发现:v
发明:v
发展:v
发生:v
出现:v
消失:v
经过:v
通过:v
帮助:v
照顾:v:zhao4 gu4
关心:v
关注:v
注意:v:zhu4 yi4
小心:v
准备:v
打算:v:da3 suan4
计划:v
决定:v
选择:v
同意:v
反对:v
支持:v
鼓励:v
表扬:v
批评:v
解决:v:jie3 jue2
处理:v:chu3 li3
管理:v
组织:v
参加:v
举行:v
进行:v
完成:v
成功:v
失败:v
胜利:v
赢得:v:ying2 de2
失去:v
得到:v:de2 dao4
获得:v
收到:v
接受:v
拒绝:v
欢迎:v
感谢:v
谢谢:v:xie4 xie5
道歉:v
原谅:v:yuan2 liang4
相信:v
怀疑:v
记得:v:ji4 de5
忘记:v
想念:v
思考:v
考虑:v:kao3 lv4
理解:v:li3 jie3
了解:v:liao3 jie3
认识:v:ren4 shi5
认为:v:ren4 wei2
以为:v:yi3 wei2
觉得:v:jue2 de5
感觉:v:gan3 jue2
感到:v
喜欢:v:xi3 huan5
热爱:v
讨厌:v
需要:v
必须:d
应该:v:ying1 gai1
可以:v
能够:v
愿意:v:yuan4 yi4
打扫:v:da3 sao3
整理:v
收拾:v:shou1 shi5
修理:v
建设:v
建造:v
盖房:v
种地:v:zhong4 di4
种植:v:zhong4 zhi2
浇水:v
收获:v
购买:v
出售:v
付钱:v
花钱:v
存钱:v
借钱:v
赚钱:v:zhuan4 qian2
节约:v
浪费:v
使用:v
利用:v
应用:v:ying4 yong4
穿过:v:chuan1 guo4
经常:d
常常:d
平常:d
通常:d
有时:d
偶尔:d
总是:d:zong3 shi4
一直:d
一起:d
一定:d
一样:a
一般:a
已经:d
曾经:d
刚才:d
马上:d:ma3 shang4
立刻:d
忽然:d
突然:d
渐渐:d
慢慢:d:man4 man4
悄悄:d
轻轻:d
非常:d
十分:d
特别:d
尤其:d
更加:d
越来越:d
几乎:d:ji1 hu1
大概:d
也许:d
可能:v
当然:d
确实:d
真正:a
互相:d
仍然:d
依然:d
居然:d
果然:d
终于:d
到底:d
原来:d
本来:d
后来:d:hou4 lai2
然后:c
于是:c
因为:c:yin1 wei4
所以:c
但是:c
可是:c
不过:c:bu4 guo4
虽然:c
如果:c
要是:c:yao4 shi4
只要:c
只有:c
不但:c
而且:c
并且:c
或者:c
还是:c:hai2 shi4
以及:c
关于:p
对于:p
由于:p
为了:p:wei4 le5
根据:p:gen1 ju4
按照:p
通过:p
随着:p:sui2 zhe5
朝着:p:chao2 zhe5
沿着:p:yan2 zhe5
除了:p:chu2 le5
第一:m
第二:m
第三:m
一百:m
一千:m
一万:m
许多:m
很多:m
不少:m
大量:m
全部:m
所有:a
整个:a
每个:r
各种:r
有些:r
有点:d:you3 dian3
一些:m
一点:m
一半:m
两个:m
几个:m
百分:m
千克:q
公斤:q
公里:q
米饭:n
年级:n
班级:n
号码:n
数字:n:shu4 zi4
数学:n:shu4 xue2
语文:n
物理:n
化学:n
生物:n
地理:n
体育:n
课程:n
节日:n
生日:n
春节:n
礼物:n
蛋糕:n
晚会:n
婚礼:n
客人:n:ke4 ren2
主人:n
邻居:n
陌生人:n
年轻人:n
老人:n
大人:n:da4 ren2
小孩:n
男人:n
女人:n
男孩:n
女孩:n
先进:a
落后:a:luo4 hou4
丰富:a
贫穷:a
富裕:a
发达:a
著名:a:zhu4 ming2
优秀:a
优美:a
良好:a
糟糕:a
错误:a
准确:a
精彩:a
成熟:a:cheng2 shu2
新型:a
古老:a
现代:n
传统:n:chuan2 tong3
习惯:n
规则:n
规定:n
法律:n
制度:n:zhi4 du4
政府:n
政策:n
社会:n
人民:n
群众:n
集体:n
个人:n
代表:n
领导:n
干部:n:gan4 bu4
会议:n
报告:n
文件:n
材料:n
资料:n
内容:n:nei4 rong2
题目:n
文章:n
段落:n:duan4 luo4
句子:n:ju4 zi5
词语:n
字典:n
词典:n
意义:n
作用:n:zuo4 yong4
影响:n
结果:n:jie2 guo3
原因:n
条件:n:tiao2 jian4
情况:n:qing2 kuang4
状态:n
过程:n:guo4 cheng2
阶段:n
基础:n
标准:n
目的:n:mu4 di4
目标:n
任务:n:ren4 wu4
责任:n
义务:n
权利:n
价格:n
价值:n
费用:n
工资:n
收入:n
支出:n
利润:n
资金:n
财产:n
商品:n
产品:n
产量:n
农业:n
工业:n
商业:n
企业:n
行业:n:hang2 ye4
职业:n
专业:n
单位:n
部门:n
机关:n
机器:n
设备:n
工具:n
仪器:n
零件:n
材质:n
钢铁:n
木头:n:mu4 tou5
玻璃:n:bo1 li5
塑料:n:su4 liao4
布料:n
棉花:n:mian2 hua1
皮革:n
纸张:n
墨水:n
胶水:n
绳子:n:sheng2 zi5
袋子:n:dai4 zi5
盒子:n:he2 zi5
箱子:n:xiang1 zi5
瓶子:n:ping2 zi5
杯子:n:bei1 zi5
盘子:n:pan2 zi5
碗筷:n
勺子:n:shao2 zi5
筷子:n:kuai4 zi5
刀子:n:dao1 zi5
剪刀:n
锤子:n:chui2 zi5
钉子:n:ding1 zi5
梯子:n:ti1 zi5
镜子:n:jing4 zi5
毛巾:n
肥皂:n
牙刷:n
牙膏:n
梳子:n:shu1 zi5
雨伞:n
手套:n
围巾:n
口袋:n
钱包:n
行李:n:xing2 li5
背包:n:bei1 bao1
地图:n
指南针:n
手表:n
闹钟:n
日历:n
温度:n
温度计:n
度数:n:du4 shu4
气温:n
季节:n
气候:n
灾害:n
地震:n
洪水:n
台风:n
干旱:n
火灾:n
战争:n
和平:n
胜负:n
军队:n
士兵:n
武器:n
英雄:n
榜样:n:bang3 yang4
模范:n:mo2 fan4
精力:n
青春:n
童年:n
记忆:n:ji4 yi4
回忆:n:hui2 yi4
印象:n
态度:n:tai4 du4
性格:n
脾气:n:pi2 qi5
品质:n
道德:n
文明:n
礼貌:n
风俗:n
方式:n
形式:n
形状:n
样子:n:yang4 zi5
模样:n:mu2 yang4
外表:n
表面:n
表情:n
动作:n
行为:n:xing2 wei2
行动:n:xing2 dong4
活动:n
运气:n:yun4 qi5
机会:n
可能性:n
未来:n
前途:n
道路:n
桥梁:n
隧道:n
楼房:n
大楼:n
楼梯:n
电梯:n
院子:n:yuan4 zi5
花园:n
菜园:n
果园:n
田野:n
庄稼:n:zhuang1 jia5
麦子:n:mai4 zi5
稻子:n:dao4 zi5
玉米:n
土豆:n
白菜:n
萝卜:n:luo2 bo5
黄瓜:n
西红柿:n
辣椒:n
大蒜:n
生姜:n
葱花:n
油盐:n
酱油:n
味道:n:wei4 dao5
香味:n
气味:n
营养:n
维生素:n
药品:n
药水:n:yao4 shui3
疾病:n
感冒:n
发烧:v:fa1 shao1
咳嗽:v:ke2 sou5
头疼:v
肚子疼:v:du4 zi5 teng2
治疗:v
手术:n
护理:v
康复:v
预防:v
卫生:n
习题:n
草稿:n
表格:n
名单:n
名字:n:ming2 zi4
姓名:n
年龄:n
性别:n
身高:n
体重:n:ti3 zhong4
地址:n
信封:n
邮票:n
包裹:n:bao1 guo3
快递:n
网络:n:wang3 luo4
网站:n
网页:n
软件:n
硬件:n
程序:n
数据:n:shu4 ju4
文档:n
密码:n
键盘:n
鼠标:n
屏幕:n
相机:n:xiang4 ji1
录音:n
视频:n
游戏:n
玩具:n
娃娃:n:wa2 wa5
积木:n
风筝:n:feng1 zheng5
皮球:n
篮球:n
足球:n
排球:n
乒乓球:n
羽毛球:n
网球:n
棋子:n:qi2 zi5
象棋:n
围棋:n
扑克:n
魔术:n
马戏:n
杂技:n
戏剧:n
京剧:n
舞蹈:n
钢琴:n
小提琴:n
吉他:n
笛子:n:di2 zi5
鼓声:n
乐器:n:yue4 qi4
演出:n
演员:n
观众:n
舞台:n
票价:n
门票:n
座位:n
排队:v
等待:v
等候:v
迟到:v
早退:v
请假:v:qing3 jia4
加班:v
出差:v:chu1 chai1
辞职:v
招聘:v
应聘:v:ying4 pin4
面试:v
培训:v
实习:v
退休:v
值班:v
交流:v
沟通:v
合作:v
竞争:v
谈判:v
签字:v
盖章:v
登记:v
报名:v
注册:v
申请:v
批准:v
审查:v
执行:v
实现:v
实行:v
实施:v
改变:v
改革:v
改进:v
改善:v
提高:v
提供:v
提出:v
提醒:v
增加:v
增长:v:zeng1 zhang3
减少:v
降低:v:jiang4 di1
扩大:v
缩小:v
保护:v
保持:v
保证:v
保存:v
保留:v
维护:v
维修:v
破坏:v
损坏:v
伤害:v
危害:v
污染:v
清洁:v
清理:v
清洗:v
打扰:v
干扰:v:gan1 rao3
影响:v
促进:v
推动:v
推广:v
宣传:v:xuan1 chuan2
介绍:v:jie4 shao4
说明:v
解释:v:jie3 shi4
描述:v
描写:v
记录:v
记载:v:ji4 zai3
统计:v
计算:v:ji4 suan4
测量:v:ce4 liang2
比较:v:bi3 jiao4
对比:v
区别:v
区分:v
分析:v
分类:v
分配:v
分享:v
分开:v
合并:v
结合:v:jie2 he2
联合:v
联系:v
联络:v
团结:v
集合:v:ji2 he2
集中:v
分散:v:fen1 san4
布置:v:bu4 zhi4
安排:v
安装:v
拆除:v
搬家:v
搬运:v
运输:v
运送:v
投递:v
传递:v:chuan2 di4
传播:v:chuan2 bo1
广播:v:guang3 bo1
播放:v:bo1 fang4
演讲:v
朗读:v:lang3 du2
背诵:v:bei4 song4
翻译:v
抄写:v
默写:v
填写:v
修改:v
删除:v
补充:v
印刷:v
出版:v
发表:v
发布:v
公布:v
宣布:v
庆祝:v
祝贺:v
祝福:v
问候:v
拜访:v
接待:v
招待:v
款待:v
照相:v:zhao4 xiang4
拍照:v
录像:v
观察:v
观看:v
欣赏:v
享受:v
体验:v
经历:v
遭遇:v
面对:v
面临:v
逃避:v
躲避:v
避免:v
防止:v
禁止:v:jin4 zhi3
允许:v
批发:v
零售:v
交换:v
交易:v
兑换:v
退货:v
退款:v
付款:v
收款:v
结账:v:jie2 zhang4
打折:v:da3 zhe2
涨价:v:zhang3 jia4
降价:v:jiang4 jia4
砍价:v
讲价:v
订购:v
预订:v
预约:v
取消:v
推迟:v
提前:v
按时:d
及时:d
准时:d
暂时:d:zan4 shi2
临时:d
长期:n:chang2 qi1
短期:n
期间:n
期限:n
日期:n
年代:n
世纪:n
时代:n
时期:n
将来:n:jiang1 lai2
从前:n
当时:n:dang1 shi2
此刻:n
瞬间:n
永远:d
始终:d
随时:d
随便:a:sui2 bian4
顺便:d:shun4 bian4
顺利:a
平安:a
平静:a
冷静:a
激动:a
兴奋:a:xing1 fen4
愉快:a
满意:a
失望:a
绝望:a
孤独:a
寂寞:a
无聊:a
有意思:a:you3 yi4 si5
骄傲:a
谦虚:a
自信:a
自豪:a
惭愧:a
后悔:v:hou4 hui3
羡慕:v
嫉妒:v
尊重:v
尊敬:v
佩服:v
崇拜:v
信任:v
依靠:v
依赖:v
鼓舞:v
安慰:v
同情:v
体贴:a
温柔:a
粗心:a
细心:a
耐心:a
热心:a
真诚:a
虚伪:a
狡猾:a
凶恶:a:xiong1 e4
残忍:a
温和:a:wen1 he2
和气:a:he2 qi5
和谐:a:he2 xie2
友好:a
亲切:a:qin1 qie4
熟悉:a:shu2 xi1
陌生:a
流利:a
标准:a
地道:a:di4 dao5
清晰:a
响亮:a:xiang3 liang4
大声:d
小声:d
悄悄话:n
玩笑:n
笑话:n:xiao4 hua4
谜语:n
谚语:n
成语:n
词汇:n
语法:n
发音:n
声调:n:sheng1 diao4
拼音:n
汉字:n
笔画:n
偏旁:n
部首:n
"""
