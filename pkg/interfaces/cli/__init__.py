"""
命令行接口

入口为 main.main(argv)，安装后的命令名为 pdrf，也可 python -m interfaces.cli 运行。
"""
