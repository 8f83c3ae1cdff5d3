package dlib;

public class JavaNames
{
    public static final String[] RESERVED = { "class", "interface", "package" };
}
