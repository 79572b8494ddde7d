"""
测试模块

包含所有单元测试和集成测试
"""
