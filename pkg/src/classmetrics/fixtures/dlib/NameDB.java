package dlib;
import java.util.*;
public class NameDB extends NamedObject
{
    // constructors
    NameDB (String name)
    {
        super(name);
    }
    private Hashtable Names = new Hashtable();

    /**
     * find the name associated with a number, or return null
     */
    public Object FindName (int number)
    {
        return( Names.get(new Integer(number)));
    }

    public Object FindName (Integer number)
    {
        return( Names.get(number));
    }

    public Object FindNumber (String name)
    {
        return( Names.get(name));
    }

    public void AddName (String s, int n)
    {
        Integer i = new Integer(n);
        Names.put(s,i);
        Names.put(i,s);
    }

    public void AddName (String s, Object n)
    {
        Names.put(s,n);
        Names.put(n,s);
    }
}
